"""Two-level quantified CNF: data model, brute-force truth, and the
monotonization / balancing pipelines.

A formula is a single universal block followed by a single existential block
over a CNF matrix.  Truth is decided by enumerating universal assignments in
lexicographic order (declared variable order, false before true) and checking
existential satisfiability with the clause-learning solver.  Variable-disjoint
parts of the matrix are evaluated independently and structurally identical
parts only once; the verdict and the reported counterexample are exactly
those of plain enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .fileio import ParseError
from .formula import (
    Assignment,
    CnfFormula,
    InvalidInstanceError,
    ValidationReport,
    Violation,
    canonical_clause,
    clause_has_distinct_vars,
    clause_is_monotone,
    cnf,
)
from .gadgets import FreshVarAllocator, build_frakM, build_frakMbar
from .solver import Solver, Status


@dataclass(frozen=True)
class Qbf2Formula:
    universals: tuple[int, ...]
    existentials: tuple[int, ...]
    matrix: CnfFormula

    def __post_init__(self) -> None:
        u = set(self.universals)
        e = set(self.existentials)
        if len(u) != len(self.universals) or len(e) != len(self.existentials):
            raise ValueError("repeated variable in a quantifier block")
        if u & e:
            raise ValueError(f"variables quantified twice: {sorted(u & e)}")
        used = {abs(l) for c in self.matrix.clauses for l in c}
        missing = used - u - e
        if missing:
            raise ValueError(f"matrix variables not quantified: {sorted(missing)}")
        for v in itertools.chain(self.universals, self.existentials):
            if not 1 <= v <= self.matrix.n_vars:
                raise ValueError(f"quantified variable {v} outside the universe")

    @property
    def p(self) -> int:
        return len(self.universals)


class QbfValue(Enum):
    YES = "yes"
    NO = "no"
    BUDGET = "budget"


@dataclass(frozen=True)
class QbfResult:
    value: QbfValue
    counterexample: Assignment | None = None


@dataclass(frozen=True)
class BalanceSpec:
    """Occurrence targets: universals (s1, s2), existentials (t1, t2)."""

    s1: int
    s2: int
    t1: int
    t2: int
    require_equal_counts: bool = False
    require_monotone: bool = False


def validate_balanced(q: Qbf2Formula, spec: BalanceSpec) -> ValidationReport:
    """Report-based check of the balanced-occurrence instance conditions."""
    v: list[Violation] = []
    for j, c in enumerate(q.matrix.clauses):
        if len(c) != 3:
            v.append(Violation("width", j, f"clause {j} has width {len(c)}, expected 3"))
        if not clause_has_distinct_vars(c):
            v.append(Violation("distinct-vars", j, f"clause {j} repeats a variable: {c}"))
        if spec.require_monotone and not clause_is_monotone(c):
            v.append(Violation("monotone", j, f"clause {j} is mixed: {c}"))
    pos: dict[int, int] = {}
    neg: dict[int, int] = {}
    for c in q.matrix.clauses:
        for l in c:
            d = pos if l > 0 else neg
            d[abs(l)] = d.get(abs(l), 0) + 1
    for u in q.universals:
        got = (pos.get(u, 0), neg.get(u, 0))
        if got != (spec.s1, spec.s2):
            v.append(Violation(
                "universal-occurrence", u,
                f"universal {u} appears {got}, expected {(spec.s1, spec.s2)}"))
    for e in q.existentials:
        got = (pos.get(e, 0), neg.get(e, 0))
        if got != (spec.t1, spec.t2):
            v.append(Violation(
                "existential-occurrence", e,
                f"existential {e} appears {got}, expected {(spec.t1, spec.t2)}"))
    if spec.require_equal_counts and len(q.universals) != len(q.existentials):
        v.append(Violation(
            "equal-counts", None,
            f"{len(q.universals)} universal vs {len(q.existentials)} existential variables"))
    return ValidationReport(not v, tuple(v))


# -- truth ------------------------------------------------------------------

def _components(q: Qbf2Formula) -> list[tuple[list[int], list[int], list[int]]]:
    """Variable-disjoint parts: (universals, existentials, clause indices)."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v in itertools.chain(q.universals, q.existentials):
        parent[v] = v
    for c in q.matrix.clauses:
        vs = [abs(l) for l in c]
        for other in vs[1:]:
            union(vs[0], other)
    comp_u: dict[int, list[int]] = {}
    comp_e: dict[int, list[int]] = {}
    comp_c: dict[int, list[int]] = {}
    for v in q.universals:
        comp_u.setdefault(find(v), []).append(v)
    for v in q.existentials:
        comp_e.setdefault(find(v), []).append(v)
    for j, c in enumerate(q.matrix.clauses):
        comp_c.setdefault(find(abs(c[0])), []).append(j)
    roots = sorted(set(comp_u) | set(comp_e) | set(comp_c))
    return [
        (comp_u.get(r, []), comp_e.get(r, []), comp_c.get(r, []))
        for r in roots
    ]


def _component_key(q, us, es, clause_idx):
    """Positional canonical form; equal keys behave identically under truth."""
    index: dict[int, int] = {}
    for i, v in enumerate(us):
        index[v] = i + 1
    for i, v in enumerate(es):
        index[v] = len(us) + i + 1
    mapped = sorted(
        tuple(sorted((index[abs(l)] if l > 0 else -index[abs(l)]) for l in q.matrix.clauses[j]))
        for j in clause_idx
    )
    return (len(us), len(es), tuple(mapped))


def _component_first_failure(
    q: Qbf2Formula,
    us: list[int],
    es: list[int],
    clause_idx: list[int],
    conflict_budget: int,
) -> tuple[str, tuple[bool, ...] | None]:
    """('yes'|'no'|'budget', lexicographically first failing local assignment)."""
    clauses = [q.matrix.clauses[j] for j in clause_idx]
    n_local = 0
    index: dict[int, int] = {}
    for v in itertools.chain(us, es):
        n_local += 1
        index[v] = n_local
    local = cnf(
        [[(index[abs(l)] if l > 0 else -index[abs(l)]) for l in c] for c in clauses],
        n_vars=n_local,
        allows_duplicate_literals=q.matrix.allows_duplicate_literals,
    )
    solver = Solver(local, conflict_budget=conflict_budget)
    for bits in itertools.product((False, True), repeat=len(us)):
        assumptions = [i + 1 if b else -(i + 1) for i, b in enumerate(bits)]
        res = solver.solve(assumptions)
        if res.status is Status.BUDGET:
            return "budget", None
        if res.status is Status.UNSAT:
            return "no", bits
    return "yes", None


def qbf_truth(
    q: Qbf2Formula,
    *,
    conflict_budget: int = 1_000_000,
    max_universal_bits: int = 24,
    decompose: bool = True,
) -> QbfResult:
    """Decide the formula; a 'no' carries the lexicographically first failing
    universal assignment (declared order, false < true).
    """
    if not decompose:
        if len(q.universals) > max_universal_bits:
            return QbfResult(QbfValue.BUDGET)
        solver = Solver(q.matrix, conflict_budget=conflict_budget)
        for bits in itertools.product((False, True), repeat=len(q.universals)):
            assumptions = [v if b else -v for v, b in zip(q.universals, bits)]
            res = solver.solve(assumptions)
            if res.status is Status.BUDGET:
                return QbfResult(QbfValue.BUDGET)
            if res.status is Status.UNSAT:
                return QbfResult(QbfValue.NO, dict(zip(q.universals, bits)))
        return QbfResult(QbfValue.YES)

    if any(len(c) == 0 for c in q.matrix.clauses):
        return QbfResult(QbfValue.NO, {v: False for v in q.universals})
    cache: dict[tuple, tuple[str, tuple[bool, ...] | None]] = {}
    candidates: list[tuple[tuple[bool, ...], dict[int, bool]]] = []
    for us, es, clause_idx in _components(q):
        if len(us) > max_universal_bits:
            return QbfResult(QbfValue.BUDGET)
        key = _component_key(q, us, es, clause_idx)
        if key not in cache:
            cache[key] = _component_first_failure(q, us, es, clause_idx, conflict_budget)
        verdict, local = cache[key]
        if verdict == "budget":
            return QbfResult(QbfValue.BUDGET)
        if verdict == "no":
            assert local is not None
            alpha = {v: False for v in q.universals}
            for v, b in zip(us, local):
                alpha[v] = b
            vec = tuple(alpha[v] for v in q.universals)
            candidates.append((vec, alpha))
    if not candidates:
        return QbfResult(QbfValue.YES)
    vec, alpha = min(candidates, key=lambda t: t[0])
    return QbfResult(QbfValue.NO, alpha)


# -- pipeline stages ---------------------------------------------------------

def triple_copy(q: Qbf2Formula) -> Qbf2Formula:
    """Three variable-disjoint copies under one prefix; truth is preserved."""
    n = q.matrix.n_vars
    universals = tuple(v + k * n for k in range(3) for v in q.universals)
    existentials = tuple(v + k * n for k in range(3) for v in q.existentials)
    clauses = []
    for k in range(3):
        off = k * n
        for c in q.matrix.clauses:
            clauses.append(canonical_clause((l + off if l > 0 else l - off) for l in c))
    matrix = CnfFormula(3 * n, tuple(clauses), q.matrix.allows_duplicate_literals)
    return Qbf2Formula(universals, existentials, matrix)


class PadVariant(Enum):
    USE_Q3 = "q3"
    USE_Q1MON = "q1mon"


def _mixed_shape(c) -> str | None:
    pos = sum(1 for l in c if l > 0)
    if pos == 1 and len(c) == 3:
        return "A"  # one positive, two negative
    if pos == 2 and len(c) == 3:
        return "B"
    return None


class MonotonizeError(ValueError):
    pass


def monotonize(q: Qbf2Formula) -> Qbf2Formula:
    """Replace mixed clauses, in triples, by the 96-variable combined enforcer.

    Triples pair the i-th mixed clause of each shape with the (i + k)-th and
    (i + 2k)-th, which matches same-source clauses across the copies produced
    by :func:`triple_copy`.  Gadget variables join the existential block.
    """
    a_idx = [j for j, c in enumerate(q.matrix.clauses) if _mixed_shape(c) == "A"]
    b_idx = [j for j, c in enumerate(q.matrix.clauses) if _mixed_shape(c) == "B"]
    if len(a_idx) % 3 or len(b_idx) % 3:
        raise MonotonizeError(
            f"mixed-clause counts not divisible by 3: {len(a_idx)} one-positive, "
            f"{len(b_idx)} one-negative"
        )
    replaced = set(a_idx) | set(b_idx)
    passthrough = [c for j, c in enumerate(q.matrix.clauses) if j not in replaced]

    alloc = FreshVarAllocator(q.matrix.n_vars + 1)
    gadget_clauses: list[tuple[int, ...]] = []
    new_existentials: list[int] = []
    for shape, idxs, build in (("A", a_idx, build_frakM), ("B", b_idx, build_frakMbar)):
        k = len(idxs) // 3
        for t in range(k):
            triple = [q.matrix.clauses[idxs[t]], q.matrix.clauses[idxs[t + k]],
                      q.matrix.clauses[idxs[t + 2 * k]]]
            inst = build(alloc, triple, tag=f"{shape}{t}")
            gadget_clauses.extend(inst.formula.clauses)
            new_existentials.extend(sorted(inst.fresh_vars.values()))

    n_vars = alloc.next_id - 1
    matrix = cnf(
        list(passthrough) + gadget_clauses,
        n_vars=n_vars,
        allows_duplicate_literals=q.matrix.allows_duplicate_literals,
    )
    return Qbf2Formula(q.universals, q.existentials + tuple(new_existentials), matrix)


def build_Q3(alloc: FreshVarAllocator) -> Qbf2Formula:
    """Quantified yes-enforcer: 5 universals (1,1), 2 existentials (2,2)."""
    u, v, w, qv, r = alloc.reserve(5, "Q3/universal")
    a, b = alloc.reserve(2, "Q3/existential")
    clauses = [
        (u, r, a), (-u, -b, -a), (v, qv, b), (-v, -r, -a), (w, a, b), (-w, -qv, -b),
    ]
    matrix = cnf(clauses, n_vars=alloc.next_id - 1)
    return Qbf2Formula((u, v, w, qv, r), (a, b), matrix)


def build_Q1mon(alloc: FreshVarAllocator) -> Qbf2Formula:
    """Monotone quantified yes-enforcer: 5 universals and 4 existentials, all (2,2)."""
    u, v, w, qv, r = alloc.reserve(5, "Q1mon/universal")
    a, b, c, d = alloc.reserve(4, "Q1mon/existential")
    clauses = [
        (u, r, a), (-u, -b, -a), (v, qv, b), (-v, -r, -a), (w, a, b), (-w, -qv, -b),
        (u, r, c), (-u, -d, -c), (v, qv, d), (-v, -r, -c), (w, c, d), (-w, -qv, -d),
    ]
    matrix = cnf(clauses, n_vars=alloc.next_id - 1)
    return Qbf2Formula((u, v, w, qv, r), (a, b, c, d), matrix)


class PadError(ValueError):
    pass


def pad_to_balance(q: Qbf2Formula, variant: PadVariant) -> Qbf2Formula:
    """Append fresh quantified yes-enforcers until |universals| = |existentials|.

    Each five-universal enforcer nets +3 universals (two existentials) for
    USE_Q3 or +1 (four existentials) for USE_Q1MON, so the existential surplus
    must be divisible by 3 for USE_Q3.
    """
    surplus = len(q.existentials) - len(q.universals)
    if surplus < 0:
        raise PadError(f"more universals than existentials by {-surplus}; cannot pad")
    if surplus == 0:
        return q
    if variant is PadVariant.USE_Q3:
        if surplus % 3:
            raise PadError(f"existential surplus {surplus} is not divisible by 3")
        blocks = surplus // 3
        builder = build_Q3
    else:
        blocks = surplus
        builder = build_Q1mon
    alloc = FreshVarAllocator(q.matrix.n_vars + 1)
    universals = list(q.universals)
    existentials = list(q.existentials)
    clauses = list(q.matrix.clauses)
    for _ in range(blocks):
        frag = builder(alloc)
        universals.extend(frag.universals)
        existentials.extend(frag.existentials)
        clauses.extend(frag.matrix.clauses)
    matrix = cnf(clauses, n_vars=alloc.next_id - 1,
                 allows_duplicate_literals=q.matrix.allows_duplicate_literals)
    return Qbf2Formula(tuple(universals), tuple(existentials), matrix)


def transform_1122(q: Qbf2Formula) -> Qbf2Formula:
    """Balanced (1,1,2,2) instance to a monotone one of the same truth value."""
    rep = validate_balanced(q, BalanceSpec(1, 1, 2, 2, require_equal_counts=True))
    if not rep.verdict:
        raise InvalidInstanceError(rep, "balanced (1,1,2,2) input")
    return pad_to_balance(monotonize(triple_copy(q)), PadVariant.USE_Q3)


def transform_2222(q: Qbf2Formula) -> Qbf2Formula:
    """Balanced (2,2,2,2) instance to a monotone one of the same truth value."""
    rep = validate_balanced(q, BalanceSpec(2, 2, 2, 2, require_equal_counts=True))
    if not rep.verdict:
        raise InvalidInstanceError(rep, "balanced (2,2,2,2) input")
    return pad_to_balance(monotonize(triple_copy(q)), PadVariant.USE_Q1MON)


# -- QDIMACS -----------------------------------------------------------------

def read_qdimacs(text: str) -> Qbf2Formula:
    """Parse a two-block (a then e) QDIMACS file; both blocks may be empty."""
    n_vars = None
    n_clauses = None
    universals: list[int] = []
    existentials: list[int] = []
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    seen_e = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}", lineno)
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        if line.startswith("a ") or line.startswith("e "):
            if n_vars is None:
                raise ParseError("quantifier line before header", lineno)
            if clauses or pending:
                raise ParseError("quantifier line after clauses", lineno)
            toks = line.split()
            if toks[-1] != "0":
                raise ParseError("quantifier line missing 0 terminator", lineno)
            ids = [int(t) for t in toks[1:-1]]
            if any(i <= 0 or i > n_vars for i in ids):
                raise ParseError("quantified variable out of range", lineno)
            if toks[0] == "a":
                if seen_e:
                    raise ParseError("universal block after existential block", lineno)
                universals.extend(ids)
            else:
                seen_e = True
                existentials.extend(ids)
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
            elif abs(lit) > n_vars:
                raise ParseError(f"literal {lit} out of range", lineno)
            else:
                pending.append(lit)
    if n_vars is None:
        raise ParseError("missing 'p cnf' header")
    if pending:
        raise ParseError("missing 0 terminator for the last clause")
    if n_clauses is not None and len(clauses) != n_clauses:
        raise ParseError(f"header declares {n_clauses} clauses but {len(clauses)} were read")
    matrix = CnfFormula(n_vars, tuple(clauses))
    return Qbf2Formula(tuple(universals), tuple(existentials), matrix)


def write_qdimacs(q: Qbf2Formula) -> str:
    lines = [f"p cnf {q.matrix.n_vars} {q.matrix.m}"]
    if q.universals:
        lines.append("a " + " ".join(str(v) for v in q.universals) + " 0")
    if q.existentials:
        lines.append("e " + " ".join(str(v) for v in q.existentials) + " 0")
    for c in q.matrix.clauses:
        lines.append(" ".join(str(l) for l in c) + " 0")
    return "\n".join(lines) + "\n"
