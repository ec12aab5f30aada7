"""Propositional data model.

Literals are signed integers in the DIMACS convention: ``v`` is the positive
literal of variable ``v >= 1`` and ``-v`` its negation.  A clause is a tuple of
literals kept in canonical order (ascending variable id, negative before
positive on ties), so clause equality is syntactic.  Formulas keep the clause
list in construction order; use :func:`canonicalize` when order-insensitive
equality is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

Clause = tuple[int, ...]
Assignment = dict[int, bool]


class FormulaError(ValueError):
    """Raised for structurally invalid literals, clauses or formulas."""


def _lit_key(lit: int) -> tuple[int, bool]:
    return (abs(lit), lit > 0)


def canonical_clause(lits: Iterable[int]) -> Clause:
    """Return the literals sorted by variable id, negative first on ties."""
    c = tuple(sorted(lits, key=_lit_key))
    for l in c:
        if not isinstance(l, int) or isinstance(l, bool) or l == 0:
            raise FormulaError(f"invalid literal {l!r}")
    return c


def clause_vars(c: Clause) -> tuple[int, ...]:
    return tuple(abs(l) for l in c)


def clause_is_monotone(c: Clause) -> bool:
    return all(l > 0 for l in c) or all(l < 0 for l in c)


def clause_has_distinct_vars(c: Clause) -> bool:
    vs = clause_vars(c)
    return len(set(vs)) == len(vs)


@dataclass(frozen=True)
class CnfFormula:
    """A CNF formula over variables 1..n_vars.

    ``allows_duplicate_literals`` marks the dialect in which a variable may
    occur more than once inside a clause.  ``symbol_table`` optionally maps
    variable ids to human-readable template names so gadget provenance
    survives composition; it does not take part in equality.
    """

    n_vars: int
    clauses: tuple[Clause, ...]
    allows_duplicate_literals: bool = False
    symbol_table: dict[int, str] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise FormulaError("n_vars must be non-negative")
        for j, c in enumerate(self.clauses):
            for l in c:
                if not isinstance(l, int) or isinstance(l, bool) or l == 0:
                    raise FormulaError(f"clause {j}: invalid literal {l!r}")
                if abs(l) > self.n_vars:
                    raise FormulaError(
                        f"clause {j}: literal {l} out of range 1..{self.n_vars}"
                    )
            if list(c) != sorted(c, key=_lit_key):
                raise FormulaError(f"clause {j} is not in canonical order: {c}")
            if not self.allows_duplicate_literals and not clause_has_distinct_vars(c):
                raise FormulaError(
                    f"clause {j} repeats a variable but duplicates are not allowed: {c}"
                )

    @property
    def m(self) -> int:
        return len(self.clauses)

    def lit_count(self) -> int:
        return sum(len(c) for c in self.clauses)

    def var_name(self, v: int) -> str:
        if self.symbol_table and v in self.symbol_table:
            return self.symbol_table[v]
        return str(v)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)


def cnf(
    clauses: Iterable[Iterable[int]],
    n_vars: int | None = None,
    allows_duplicate_literals: bool = False,
    symbol_table: dict[int, str] | None = None,
) -> CnfFormula:
    """Build a formula, canonicalizing every clause.

    ``n_vars`` defaults to the largest variable mentioned.
    """
    canon = tuple(canonical_clause(c) for c in clauses)
    if n_vars is None:
        n_vars = max((abs(l) for c in canon for l in c), default=0)
    return CnfFormula(n_vars, canon, allows_duplicate_literals, symbol_table)


def canonicalize(f: CnfFormula) -> CnfFormula:
    """Sort the clause list; duplicate clauses keep their multiplicity."""
    ordered = tuple(sorted(f.clauses, key=lambda c: tuple(_lit_key(l) for l in c)))
    return CnfFormula(f.n_vars, ordered, f.allows_duplicate_literals, f.symbol_table)


def negate_formula(f: CnfFormula) -> CnfFormula:
    """Flip the sign of every literal; clause count and widths are unchanged."""
    flipped = tuple(canonical_clause(-l for l in c) for c in f.clauses)
    return CnfFormula(f.n_vars, flipped, f.allows_duplicate_literals, f.symbol_table)


def map_variables(
    f: CnfFormula, var_map: Mapping[int, int], n_vars: int | None = None
) -> CnfFormula:
    """Rename variables through ``var_map`` (must cover every used variable)."""
    out = []
    for c in f.clauses:
        out.append(
            canonical_clause(
                (var_map[abs(l)] if l > 0 else -var_map[abs(l)]) for l in c
            )
        )
    if n_vars is None:
        n_vars = max((abs(l) for c in out for l in c), default=0)
    symbols = None
    if f.symbol_table is not None:
        symbols = {var_map[v]: s for v, s in f.symbol_table.items() if v in var_map}
    return CnfFormula(n_vars, tuple(out), f.allows_duplicate_literals, symbols)


@dataclass(frozen=True)
class OccurrenceProfile:
    """Per-variable (unnegated, negated) appearance counts with multiplicity."""

    counts: tuple[tuple[int, int], ...]  # index v-1 -> (pos, neg)

    def of(self, var: int) -> tuple[int, int]:
        return self.counts[var - 1]

    def items(self) -> Iterator[tuple[int, tuple[int, int]]]:
        return ((v + 1, pair) for v, pair in enumerate(self.counts))

    def total(self) -> int:
        return sum(p + n for p, n in self.counts)


def occurrence_profile(f: CnfFormula) -> OccurrenceProfile:
    pos = [0] * (f.n_vars + 1)
    neg = [0] * (f.n_vars + 1)
    for c in f.clauses:
        for l in c:
            if l > 0:
                pos[l] += 1
            else:
                neg[-l] += 1
    return OccurrenceProfile(tuple((pos[v], neg[v]) for v in range(1, f.n_vars + 1)))


class InstanceClass(Enum):
    MONO_3SAT_22 = "mono3sat22"
    MONO_3SAT_STAR_22 = "mono3sat-star22"
    THREE_SAT_22 = "3sat22"
    MONO_NAE_E2 = "mono-nae-e2"


@dataclass(frozen=True)
class Violation:
    rule: str
    index: int | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    verdict: bool
    violations: tuple[Violation, ...]

    def __bool__(self) -> bool:
        return self.verdict


class InvalidInstanceError(ValueError):
    """An operation's input failed its instance-class validation."""

    def __init__(self, report: ValidationReport, what: str = "input"):
        self.report = report
        lines = "; ".join(v.message for v in report.violations[:5])
        super().__init__(f"{what} fails validation: {lines}")


def validate_class(f: CnfFormula, cls: InstanceClass) -> ValidationReport:
    """Check membership in one of the bounded-occurrence instance classes.

    Failures are reported, never thrown.  The checks per class:

    * width 3 for every clause (all classes);
    * three pairwise-distinct variables per clause (off for the * dialect);
    * monotone clauses (monotone classes), all-positive for MONO_NAE_E2;
    * unique clauses (all but MONO_NAE_E2, where duplicate pairs are the
      point of the trivial-pair argument);
    * every variable unnegated twice and negated twice, or exactly two
      total all-positive appearances for MONO_NAE_E2.
    """
    v: list[Violation] = []
    check_distinct = cls is not InstanceClass.MONO_3SAT_STAR_22
    check_monotone = cls is not InstanceClass.THREE_SAT_22
    check_unique = cls is not InstanceClass.MONO_NAE_E2
    for j, c in enumerate(f.clauses):
        if len(c) != 3:
            v.append(Violation("width", j, f"clause {j} has width {len(c)}, expected 3"))
        if check_distinct and not clause_has_distinct_vars(c):
            v.append(Violation("distinct-vars", j, f"clause {j} repeats a variable: {c}"))
        if check_monotone and not clause_is_monotone(c):
            v.append(Violation("monotone", j, f"clause {j} is mixed: {c}"))
        if cls is InstanceClass.MONO_NAE_E2 and any(l < 0 for l in c):
            v.append(Violation("all-positive", j, f"clause {j} has a negated literal: {c}"))
    if check_unique:
        seen: dict[Clause, int] = {}
        for j, c in enumerate(f.clauses):
            if c in seen:
                v.append(Violation("unique", j, f"clause {j} duplicates clause {seen[c]}: {c}"))
            else:
                seen[c] = j
    prof = occurrence_profile(f)
    for var, (p, n) in prof.items():
        if cls is InstanceClass.MONO_NAE_E2:
            if (p, n) != (2, 0):
                v.append(Violation(
                    "occurrence", var,
                    f"variable {var} appears ({p},{n}), expected (2,0)"))
        else:
            if (p, n) != (2, 2):
                v.append(Violation(
                    "occurrence", var,
                    f"variable {var} appears ({p},{n}), expected (2,2)"))
    return ValidationReport(not v, tuple(v))


def lit_value(l: int, a: Mapping[int, bool]) -> bool | None:
    b = a.get(abs(l))
    if b is None:
        return None
    return b if l > 0 else not b


def clause_satisfied(c: Clause, a: Mapping[int, bool]) -> bool:
    return any(lit_value(l, a) for l in c)


def satisfies(f: CnfFormula, a: Mapping[int, bool]) -> bool:
    """True when the assignment sets at least one literal in each clause true."""
    return all(clause_satisfied(c, a) for c in f.clauses)


def is_total(a: Mapping[int, bool], n_vars: int) -> bool:
    return set(a.keys()) == set(range(1, n_vars + 1))


def simplify_under(f: CnfFormula, a: Mapping[int, bool]) -> CnfFormula:
    """Apply a partial assignment, then propagate units exhaustively.

    Clauses satisfied by ``a`` are dropped and false literals removed.  Unit
    clauses already present or arising afterwards are propagated into the
    other clauses but stay in the output, so forced values remain visible.
    An empty clause is retained to signal a conflict.
    """
    val: dict[int, bool] = dict(a)

    def keep(c: Clause) -> Clause | None:
        # None means drop (satisfied); true unit clauses stay as the record
        # of a forced value
        if len(set(c)) == 1:
            b = val.get(abs(c[0]))
            if b is not None and b == (c[0] > 0):
                return c
        out = []
        for l in c:
            b = val.get(abs(l))
            if b is None:
                out.append(l)
            elif b == (l > 0):
                return None
        return canonical_clause(out)

    clauses: list[Clause] = []
    for c in f.clauses:
        kept = keep(c)
        if kept is not None:
            clauses.append(kept)

    while not any(len(c) == 0 for c in clauses):
        unit = None
        for c in clauses:
            if len(set(c)) == 1 and val.get(abs(c[0])) is None:
                unit = c[0]
                break
        if unit is None:
            break
        val[abs(unit)] = unit > 0
        clauses = [kept for c in clauses if (kept := keep(c)) is not None]

    return CnfFormula(
        f.n_vars, tuple(clauses), f.allows_duplicate_literals, f.symbol_table
    )
