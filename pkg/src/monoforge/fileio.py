"""CNF interchange formats: DIMACS, bracketed signed-integer lists, JSON.

The list format is the nested ``[[1, 2], [-2, -3]]`` form used by the
machine-readable gadget listings; it doubles as valid JSON.
"""

from __future__ import annotations

import json

from .formula import CnfFormula, canonical_clause, clause_has_distinct_vars


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _needs_dup_flag(clauses) -> bool:
    return any(not clause_has_distinct_vars(c) for c in clauses)


def read_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF: 'p cnf <vars> <clauses>' then 0-terminated clauses.

    Clauses may span lines.  The duplicate-literal dialect flag is set
    automatically when some clause repeats a variable.
    """
    n_vars = None
    n_clauses = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n_vars is not None:
                raise ParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n_vars, n_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n_vars < 0 or n_clauses < 0:
                raise ParseError(f"malformed header {line!r}", lineno)
            continue
        if n_vars is None:
            raise ParseError(f"clause before header: {line!r}", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"invalid literal token {tok!r}", lineno) from None
            if lit == 0:
                clauses.append(canonical_clause(pending))
                pending = []
            else:
                if abs(lit) > n_vars:
                    raise ParseError(f"literal {lit} out of range 1..{n_vars}", lineno)
                pending.append(lit)
    if n_vars is None:
        raise ParseError("missing 'p cnf' header")
    if pending:
        raise ParseError("missing 0 terminator for the last clause")
    if n_clauses is not None and len(clauses) != n_clauses:
        raise ParseError(
            f"header declares {n_clauses} clauses but {len(clauses)} were read"
        )
    return CnfFormula(n_vars, tuple(clauses), _needs_dup_flag(clauses))


def write_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.n_vars} {f.m}"]
    for c in f.clauses:
        lines.append(" ".join(str(l) for l in c) + " 0")
    return "\n".join(lines) + "\n"


def read_clause_list(text: str) -> CnfFormula:
    """Parse a bracketed list of signed-integer clauses, e.g. [[1, 2], [-2, -3]]."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not a well-formed clause list: {e}") from None
    if not isinstance(data, list):
        raise ParseError("expected a list of clauses")
    clauses = []
    for j, c in enumerate(data):
        if not isinstance(c, list):
            raise ParseError(f"clause {j} is not a list")
        for l in c:
            if not isinstance(l, int) or isinstance(l, bool):
                raise ParseError(f"clause {j}: non-integer token {l!r}")
            if l == 0:
                raise ParseError(f"clause {j}: zero literal")
        clauses.append(canonical_clause(c))
    n_vars = max((abs(l) for c in clauses for l in c), default=0)
    return CnfFormula(n_vars, tuple(clauses), _needs_dup_flag(clauses))


def write_clause_list(f: CnfFormula) -> str:
    return json.dumps([list(c) for c in f.clauses])


def formula_to_json(f: CnfFormula) -> str:
    obj: dict = {
        "n_vars": f.n_vars,
        "clauses": [list(c) for c in f.clauses],
        "allows_duplicate_literals": f.allows_duplicate_literals,
    }
    if f.symbol_table:
        obj["symbols"] = {str(v): s for v, s in f.symbol_table.items()}
    return json.dumps(obj, indent=None)


def formula_from_json(text: str) -> CnfFormula:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not well-formed JSON: {e}") from None
    if not isinstance(obj, dict) or "n_vars" not in obj or "clauses" not in obj:
        raise ParseError("expected an object with n_vars and clauses")
    n_vars = obj["n_vars"]
    if not isinstance(n_vars, int) or n_vars < 0:
        raise ParseError("n_vars must be a non-negative integer")
    clauses = []
    for j, c in enumerate(obj["clauses"]):
        if not isinstance(c, list) or any(
            not isinstance(l, int) or isinstance(l, bool) or l == 0 for l in c
        ):
            raise ParseError(f"clause {j} is not a list of nonzero integers")
        clauses.append(canonical_clause(c))
    symbols = None
    if "symbols" in obj and obj["symbols"] is not None:
        symbols = {int(v): str(s) for v, s in obj["symbols"].items()}
    return CnfFormula(
        n_vars,
        tuple(clauses),
        bool(obj.get("allows_duplicate_literals", _needs_dup_flag(clauses))),
        symbols,
    )
