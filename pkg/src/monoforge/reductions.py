"""The two hardness reductions into the balanced monotone class, as executable
and provenance-tracked transformations.

Both keep pass-through clauses first (in copy order for the tripling
reduction) and append gadget blocks in source-clause order, so outputs are
deterministic functions of their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import (
    CnfFormula,
    InstanceClass,
    InvalidInstanceError,
    canonical_clause,
    cnf,
    validate_class,
)
from .gadgets import FreshVarAllocator, build_S, build_frakM, build_frakMbar


@dataclass(frozen=True)
class ProvenanceEntry:
    kind: str  # "original" | "gadget"
    source_clause: int | None
    gadget: str | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "source_clause": self.source_clause, "gadget": self.gadget}


@dataclass(frozen=True)
class ReductionStats:
    vars_added: int
    clauses_added: int
    enforcers_used: int


@dataclass(frozen=True)
class ReductionOutput:
    formula: CnfFormula
    provenance: tuple[ProvenanceEntry, ...]  # aligned with formula.clauses
    stats: ReductionStats

    def provenance_json(self) -> list[dict]:
        return [p.to_json() for p in self.provenance]


def _dup_var(c) -> int | None:
    seen = set()
    for l in c:
        if abs(l) in seen:
            return abs(l)
        seen.add(abs(l))
    return None


def reduce_star22_to_mono22(f: CnfFormula) -> ReductionOutput:
    """Eliminate duplicate-literal clauses from a monotone (2,2) instance.

    A positive clause with a duplicate, say (p or p or q), becomes one
    99-variable simulator block with ports (p, p, q); negative duplicates get
    the negated block.  Clauses without duplicates pass through unchanged.
    """
    rep = validate_class(f, InstanceClass.MONO_3SAT_STAR_22)
    if not rep.verdict:
        raise InvalidInstanceError(rep, "monotone *(2,2) input")
    alloc = FreshVarAllocator(f.n_vars + 1)
    passthrough: list[tuple[int, ...]] = []
    pass_prov: list[ProvenanceEntry] = []
    gadget_clauses: list[tuple[int, ...]] = []
    gadget_prov: list[ProvenanceEntry] = []
    enforcers = 0
    for j, c in enumerate(f.clauses):
        if _dup_var(c) is None:
            passthrough.append(c)
            pass_prov.append(ProvenanceEntry("original", j))
            continue
        enforcers += 1
        vs = [abs(l) for l in c]
        negative = c[0] < 0
        tag = f"S{j}" if not negative else f"Sbar{j}"
        inst = build_S(alloc, vs[0], vs[1], vs[2], negative=negative, tag=tag)
        gadget_clauses.extend(inst.formula.clauses)
        gadget_prov.extend(
            ProvenanceEntry("gadget", j, tag) for _ in inst.formula.clauses
        )
    n_vars = alloc.next_id - 1
    out = cnf(passthrough + gadget_clauses, n_vars=n_vars)
    stats = ReductionStats(
        vars_added=n_vars - f.n_vars,
        clauses_added=len(gadget_clauses),
        enforcers_used=enforcers,
    )
    return ReductionOutput(out, tuple(pass_prov + gadget_prov), stats)


def reduce_3sat22_to_mono22(f: CnfFormula) -> ReductionOutput:
    """Monotonize a (2,2)-balanced 3-SAT instance by tripling.

    Three variable-disjoint copies make every mixed-clause shape count
    divisible by 3; each mixed source clause together with its two copies is
    then replaced by one 96-variable combined enforcer.  Monotone clauses
    pass through in copy order.
    """
    rep = validate_class(f, InstanceClass.THREE_SAT_22)
    if not rep.verdict:
        raise InvalidInstanceError(rep, "(2,2)-balanced 3-SAT input")
    n = f.n_vars

    def copy_clause(c, k):
        off = k * n
        return canonical_clause((l + off if l > 0 else l - off) for l in c)

    mixed = []
    for j, c in enumerate(f.clauses):
        pos = sum(1 for l in c if l > 0)
        if pos in (1, 2):
            mixed.append((j, "A" if pos == 1 else "B"))
    # after tripling, each shape count is three times the source count
    assert (3 * sum(1 for _, s in mixed if s == "A")) % 3 == 0
    assert (3 * sum(1 for _, s in mixed if s == "B")) % 3 == 0

    mixed_idx = {j for j, _ in mixed}
    passthrough: list[tuple[int, ...]] = []
    pass_prov: list[ProvenanceEntry] = []
    for k in range(3):
        for j, c in enumerate(f.clauses):
            if j not in mixed_idx:
                passthrough.append(copy_clause(c, k))
                pass_prov.append(ProvenanceEntry("original", j))

    alloc = FreshVarAllocator(3 * n + 1)
    gadget_clauses: list[tuple[int, ...]] = []
    gadget_prov: list[ProvenanceEntry] = []
    for j, shape in mixed:
        triple = [copy_clause(f.clauses[j], k) for k in range(3)]
        builder = build_frakM if shape == "A" else build_frakMbar
        tag = f"frakM{j}" if shape == "A" else f"frakMbar{j}"
        inst = builder(alloc, triple, tag=tag)
        gadget_clauses.extend(inst.formula.clauses)
        gadget_prov.extend(
            ProvenanceEntry("gadget", j, tag) for _ in inst.formula.clauses
        )
    n_vars = alloc.next_id - 1 if alloc.next_id > 3 * n + 1 else 3 * n
    out = cnf(passthrough + gadget_clauses, n_vars=n_vars)
    stats = ReductionStats(
        vars_added=n_vars - f.n_vars,
        clauses_added=len(gadget_clauses),
        enforcers_used=len(mixed),
    )
    return ReductionOutput(out, tuple(pass_prov + gadget_prov), stats)
