"""Builders for every named clause set, enforcer and instance.

Template numbering: x1..x8 -> 1..8, y1..y9 -> 9..17, z1..z15 -> 18..32.  The
42-clause core gadget M is the union of four clause groups; its first three
clauses (the 2-clause and the two binary implications) are the port slots of
every enforcer derived from it.  The published listing of M orders the last
group positives-first, which `M_LISTING` reproduces so that instances built
here match the reference lists clause-for-clause, in order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .formula import (
    CnfFormula,
    canonical_clause,
    clause_has_distinct_vars,
    cnf,
    map_variables,
    negate_formula,
    simplify_under,
)

# clause groups in their construction numbering
F2_CLAUSES = ((1, 2), (-2, -3), (-2, -4))

F3_CLAUSES = (
    (-3, -5, -6),
    (-4, -5, -6),
    (5, 7, 8),
    (6, 7, 8),
    (-7, -18, -19),
    (-7, -20, -21),
    (-8, -18, -19),
    (-8, -20, -21),
)

G_CLAUSES = (
    (3, 9, 10),
    (3, 11, 12),
    (4, 13, 14),
    (4, 15, 16),
    (9, 12, 15),
    (10, 13, 17),
    (11, 16, 17),
    (-9, -13, -16),
    (-9, -14, -17),
    (-10, -11, -14),
    (-10, -12, -16),
    (-11, -13, -15),
    (-12, -15, -17),
)

H_CLAUSES = (
    (-1, -22, -23),
    (-1, -24, -25),
    (2, 24, 32),
    (18, 23, 25),
    (18, 28, 29),
    (19, 23, 25),
    (19, 28, 29),
    (20, 22, 26),
    (20, 30, 31),
    (21, 22, 31),
    (21, 26, 27),
    (24, 27, 30),
    (-22, -25, -32),
    (-23, -24, -26),
    (-26, -28, -30),
    (-27, -28, -31),
    (-27, -29, -31),
    (-29, -30, -32),
)


def _listing_key(c):
    return tuple((abs(l), l > 0) for l in c)


# the published listing reorders only the last group: positive clauses first,
# each half sorted lexicographically
_H_LISTING = tuple(sorted((c for c in H_CLAUSES if c[0] > 0), key=_listing_key)) + tuple(
    sorted((c for c in H_CLAUSES if c[0] < 0), key=_listing_key)
)

M_LISTING: tuple[tuple[int, ...], ...] = F2_CLAUSES + F3_CLAUSES + G_CLAUSES + _H_LISTING

TEMPLATE_SYMBOLS: dict[int, str] = (
    {v: f"x{v}" for v in range(1, 9)}
    | {8 + i: f"y{i}" for i in range(1, 10)}
    | {17 + i: f"z{i}" for i in range(1, 16)}
)

# template variables that appear once unnegated and twice negated in M
ONCE_POSITIVE_VARS = (1, 5, 6, 14, 32)  # x1, x5, x6, y6, z15


class FreshVarAllocator:
    """Hands out contiguous ranges of fresh variable ids, never reusing one."""

    def __init__(self, start: int = 1):
        if start < 1:
            raise ValueError("variable ids start at 1")
        self._next = start
        self.reservations: list[tuple[str, range]] = []

    @property
    def next_id(self) -> int:
        return self._next

    def reserve(self, count: int, tag: str = "") -> range:
        r = range(self._next, self._next + count)
        self._next += count
        self.reservations.append((tag, r))
        return r


@dataclass(frozen=True)
class GadgetInstantiation:
    """One freshly built gadget: its formula, ports and fresh-variable map."""

    formula: CnfFormula
    port_literals: dict[str, int] = field(compare=False)
    fresh_vars: dict[str, int] = field(compare=False)
    tag: int | str = 0

    def port_vars(self) -> tuple[int, ...]:
        return tuple(sorted({abs(l) for l in self.port_literals.values()}))


def _group_formula(clauses) -> CnfFormula:
    return cnf(clauses, n_vars=32, symbol_table=dict(TEMPLATE_SYMBOLS))


def build_F2() -> CnfFormula:
    """The three 2-clauses that pin down x1..x4."""
    return _group_formula(F2_CLAUSES)


def build_F3() -> CnfFormula:
    """The eight 3-clauses bridging x3..x8 into z1..z4."""
    return _group_formula(F3_CLAUSES)


def build_G() -> CnfFormula:
    """The 13-clause group over x3, x4 and y1..y9."""
    return _group_formula(G_CLAUSES)


def build_H() -> CnfFormula:
    """The 18-clause group over x1, x2 and z1..z15."""
    return _group_formula(H_CLAUSES)


def build_M() -> CnfFormula:
    """The unsatisfiable 42-clause set over 32 variables, in listing order."""
    return _group_formula(M_LISTING)


def build_y_core() -> CnfFormula:
    """The 13-clause unsatisfiable core over y1..y9.

    Equals the G group with its two port variables set false, renumbered to
    1..9; matches the published core listing clause-for-clause.
    """
    g = simplify_under(build_G(), {3: False, 4: False})
    f = map_variables(g, {8 + i: i for i in range(1, 10)}, n_vars=9)
    return CnfFormula(9, f.clauses, False, {i: f"y{i}" for i in range(1, 10)})


def build_z_core() -> CnfFormula:
    """The 20-clause unsatisfiable core over z1..z15.

    The two leading 2-clauses are the implied constraints from the bridge
    group; the rest is the H group with x1 true and x2 false.
    """
    h = simplify_under(build_H(), {1: True, 2: False})
    lead = ((-18, -19), (-20, -21))
    f = cnf(lead + h.clauses, n_vars=32)
    f = map_variables(f, {17 + i: i for i in range(1, 16)}, n_vars=15)
    return CnfFormula(15, f.clauses, False, {i: f"z{i}" for i in range(1, 16)})


def _m_instance_clauses(
    fresh: range,
    ports: tuple[int | None, int | None, int | None],
    negate: bool = False,
) -> list[tuple[int, ...]]:
    """Instantiate the 42-clause listing over a fresh 32-variable block.

    ``ports`` are signed external literals appended to the three port slots
    (None leaves a slot as written).  ``negate`` flips every literal,
    including the ports.
    """
    base = fresh.start - 1
    out = []
    for j, c in enumerate(M_LISTING):
        lits = [(base + t) if t > 0 else -(base - t) for t in c]
        if j < 3 and ports[j] is not None:
            lits.append(ports[j])
        if negate:
            lits = [-l for l in lits]
        out.append(canonical_clause(lits))
    return out


def _fresh_symbols(fresh: range, tag: int | str) -> dict[str, int]:
    return {f"{TEMPLATE_SYMBOLS[t]}^{tag}": fresh.start + t - 1 for t in range(1, 33)}


def _check_ports_fresh(ports: Iterable[int], fresh: Iterable[range]) -> None:
    for p in ports:
        if p < 1:
            raise ValueError(f"port variable {p} is not a variable id")
        if any(p in r for r in fresh):
            raise ValueError(f"port variable {p} collides with fresh range")


def build_M_enforcer(
    alloc: FreshVarAllocator, u1: int, u2: int, u3: int, tag: int | str = 0
) -> GadgetInstantiation:
    """Enforcer simulating the mixed clause {u1, -u2, -u3}.

    u2 = u3 is allowed (that is how duplicate literals are absorbed); u1
    coinciding with u2 or u3 is rejected.
    """
    if u1 in (u2, u3):
        raise ValueError("u1 must differ from u2 and u3")
    fresh = alloc.reserve(32, f"M^{tag}")
    _check_ports_fresh((u1, u2, u3), [fresh])
    clauses = _m_instance_clauses(fresh, (u1, -u2, -u3))
    n_vars = max(fresh.stop - 1, u1, u2, u3)
    symbols = {v: s for s, v in _fresh_symbols(fresh, tag).items()}
    return GadgetInstantiation(
        formula=CnfFormula(n_vars, tuple(clauses), False, symbols),
        port_literals={"u1": u1, "u2": -u2, "u3": -u3},
        fresh_vars=_fresh_symbols(fresh, tag),
        tag=tag,
    )


def build_Mbar_enforcer(
    alloc: FreshVarAllocator, u1: int, u2: int, u3: int, tag: int | str = 0
) -> GadgetInstantiation:
    """Literal-wise negation of the M enforcer: simulates {-u1, u2, u3}."""
    if u1 in (u2, u3):
        raise ValueError("u1 must differ from u2 and u3")
    fresh = alloc.reserve(32, f"Mbar^{tag}")
    _check_ports_fresh((u1, u2, u3), [fresh])
    clauses = _m_instance_clauses(fresh, (u1, -u2, -u3), negate=True)
    n_vars = max(fresh.stop - 1, u1, u2, u3)
    symbols = {v: s for s, v in _fresh_symbols(fresh, tag).items()}
    return GadgetInstantiation(
        formula=CnfFormula(n_vars, tuple(clauses), False, symbols),
        port_literals={"u1": -u1, "u2": u2, "u3": u3},
        fresh_vars=_fresh_symbols(fresh, tag),
        tag=tag,
    )


def build_N(alloc: FreshVarAllocator, u: int, tag: int | str = 0) -> GadgetInstantiation:
    """42-clause blocker: keeps the 2-clause, hangs -u on both implications.

    Satisfiable exactly when the external assignment sets u false.
    """
    fresh = alloc.reserve(32, f"N^{tag}")
    _check_ports_fresh((u,), [fresh])
    clauses = _m_instance_clauses(fresh, (None, -u, -u))
    n_vars = max(fresh.stop - 1, u)
    symbols = {v: s for s, v in _fresh_symbols(fresh, tag).items()}
    return GadgetInstantiation(
        formula=CnfFormula(n_vars, tuple(clauses), False, symbols),
        port_literals={"u": -u},
        fresh_vars=_fresh_symbols(fresh, tag),
        tag=tag,
    )


def build_S(
    alloc: FreshVarAllocator,
    v1: int,
    v2: int,
    v3: int,
    negative: bool = False,
    tag: int | str = 0,
) -> GadgetInstantiation:
    """Monotone clause simulator over ports (v1, v2, v3): 99 fresh variables,
    133 monotone 3-clauses, every fresh variable twice unnegated and twice
    negated.  Ports may repeat; each lands in a different clause.

    positive polarity: satisfiable iff at least one port is true;
    ``negative=True`` emits the literal-wise negation (ports -v1, -v2, -v3).
    """
    copies = [alloc.reserve(32, f"S{tag}/copy{i}") for i in (1, 2, 3)]
    u_range = alloc.reserve(3, f"S{tag}/u")
    us = list(u_range)
    ports = (v1, v2, v3)
    _check_ports_fresh(ports, copies + [u_range])

    def cv(i: int, t: int) -> int:  # template var t in copy i (1-based)
        return copies[i - 1].start + t - 1

    clauses: list[tuple[int, ...]] = []
    for i in (1, 2, 3):
        clauses.append(canonical_clause((cv(i, 1), cv(i, 2), ports[i - 1])))
    for i in (1, 2, 3):
        body = _m_instance_clauses(copies[i - 1], (None, -us[i - 1], -us[i - 1]))
        clauses.extend(body[1:])  # the bare 2-clause is replaced by the port clause
    clauses.append(canonical_clause(us))
    for t in (1, 5, 6):
        clauses.append(canonical_clause((cv(1, t), cv(2, t), cv(3, t))))
    for i in (1, 2, 3):
        clauses.append(canonical_clause((cv(i, 14), cv(i, 32), us[i - 1])))

    n_vars = max(u_range.stop - 1, *ports)
    symbols: dict[int, str] = {}
    fresh_vars: dict[str, int] = {}
    for i in (1, 2, 3):
        for s, v in _fresh_symbols(copies[i - 1], f"{tag}.{i}").items():
            symbols[v] = s
            fresh_vars[s] = v
    for i, uv in enumerate(us, 1):
        symbols[uv] = f"u{i}^{tag}"
        fresh_vars[f"u{i}^{tag}"] = uv
    formula = CnfFormula(n_vars, tuple(clauses), False, symbols)
    port_sign = 1
    if negative:
        formula = negate_formula(formula)
        port_sign = -1
    return GadgetInstantiation(
        formula=formula,
        port_literals={f"v{i}": port_sign * ports[i - 1] for i in (1, 2, 3)},
        fresh_vars=fresh_vars,
        tag=tag,
    )


def build_Sbar(
    alloc: FreshVarAllocator, v1: int, v2: int, v3: int, tag: int | str = 0
) -> GadgetInstantiation:
    return build_S(alloc, v1, v2, v3, negative=True, tag=tag)


def _frak_ports(clause: tuple[int, ...], positive_shape: bool) -> tuple[int, int, int]:
    """Split a mixed clause into enforcer ports (u1, u2, u3).

    positive_shape: one positive and two negative literals, simulated as
    {u1, -u2, -u3}; otherwise the mirrored one-negative shape.
    """
    if len(clause) != 3 or not clause_has_distinct_vars(clause):
        raise ValueError(f"not a 3-clause over distinct variables: {clause}")
    pos = [l for l in clause if l > 0]
    neg = [-l for l in clause if l < 0]
    if positive_shape:
        if len(pos) != 1:
            raise ValueError(f"expected one positive and two negative literals: {clause}")
        return pos[0], neg[0], neg[1]
    if len(neg) != 1:
        raise ValueError(f"expected one negative and two positive literals: {clause}")
    return neg[0], pos[0], pos[1]


def _build_frak(
    alloc: FreshVarAllocator,
    triple: Sequence[tuple[int, ...]],
    negate: bool,
    tag: int | str,
) -> GadgetInstantiation:
    if len(triple) != 3:
        raise ValueError("exactly three clauses are combined per instance")
    # callers hand over one-positive/two-negative clauses; the mirror builder
    # negates its input before delegating here
    ports = [_frak_ports(c, positive_shape=True) for c in triple]
    copies = [alloc.reserve(32, f"frak{tag}/copy{i}") for i in (1, 2, 3)]
    for u1, u2, u3 in ports:
        _check_ports_fresh((u1, u2, u3), copies)

    def cv(i: int, t: int) -> int:
        return copies[i - 1].start + t - 1

    clauses: list[tuple[int, ...]] = []
    for i, (u1, u2, u3) in enumerate(ports, 1):
        clauses.extend(_m_instance_clauses(copies[i - 1], (u1, -u2, -u3), negate=negate))
    links = (
        (cv(1, 1), cv(1, 5), cv(1, 6)),
        (cv(1, 14), cv(1, 32), cv(2, 1)),
        (cv(2, 5), cv(2, 6), cv(2, 14)),
        (cv(2, 32), cv(3, 1), cv(3, 5)),
        (cv(3, 6), cv(3, 14), cv(3, 32)),
    )
    sign = -1 if negate else 1
    for link in links:
        clauses.append(canonical_clause(sign * v for v in link))

    port_vars = [v for t in ports for v in t]
    n_vars = max([copies[2].stop - 1] + port_vars)
    symbols: dict[int, str] = {}
    fresh_vars: dict[str, int] = {}
    for i in (1, 2, 3):
        for s, v in _fresh_symbols(copies[i - 1], f"{tag}.{i}").items():
            symbols[v] = s
            fresh_vars[s] = v
    formula = CnfFormula(n_vars, tuple(clauses), False, symbols)
    port_literals = {}
    for i, (u1, u2, u3) in enumerate(ports):
        base = 3 * i
        port_literals[f"u{base + 1}"] = sign * u1
        port_literals[f"u{base + 2}"] = sign * -u2
        port_literals[f"u{base + 3}"] = sign * -u3
    return GadgetInstantiation(formula, port_literals, fresh_vars, tag)


def build_frakM(
    alloc: FreshVarAllocator, triple: Sequence[tuple[int, ...]], tag: int | str = 0
) -> GadgetInstantiation:
    """Replace three one-positive/two-negative mixed clauses at once.

    96 fresh variables, 131 monotone clauses (three 42-clause instances plus
    five linking clauses), every fresh variable twice unnegated and twice
    negated.  Satisfiable iff each simulated clause is satisfied externally.
    """
    return _build_frak(alloc, triple, negate=False, tag=tag)


def build_frakMbar(
    alloc: FreshVarAllocator, triple: Sequence[tuple[int, ...]], tag: int | str = 0
) -> GadgetInstantiation:
    """Mirror image of :func:`build_frakM` for one-negative/two-positive triples."""
    for c in triple:
        _frak_ports(c, positive_shape=False)  # shape check against the originals
    negated = [canonical_clause(-l for l in c) for c in triple]
    return _build_frak(alloc, negated, negate=True, tag=tag)


CORE8_SYMBOLS = {1: "a", 2: "b", 3: "c", 4: "d", 5: "e", 6: "f"}


def build_core8() -> CnfFormula:
    """The eight-clause unsatisfiable core over a..f, duplicates included."""
    clauses = (
        (-1, -4, -6),
        (2, 4, 5),
        (5, -2, -2),
        (4, -6, -3),
        (1, -3, -5),
        (-5, 3, 3),
        (-4, 1, 2),
        (-1, 6, 6),
    )
    return cnf(clauses, n_vars=6, allows_duplicate_literals=True,
               symbol_table=dict(CORE8_SYMBOLS))


def build_U() -> CnfFormula:
    """The unsatisfiable balanced monotone instance: 198 variables, 264 clauses.

    Copy i of the 42-clause gadget occupies ids 32*(i-1)+1 .. 32*i (copies
    4..6 literal-wise negated), the six shared variables a..f are 193..198,
    and ten mop-up clauses balance the five once-positive variables of each
    copy.  Clause order matches the reference listing exactly.
    """
    a, b, c, d, e, f = range(193, 199)
    specs = (
        (False, (e, b, b)),
        (False, (d, c, f)),
        (False, (a, c, e)),
        (True, (e, c, c)),
        (True, (d, a, b)),
        (True, (a, f, f)),
    )
    clauses: list[tuple[int, ...]] = [
        canonical_clause((-a, -d, -f)),
        canonical_clause((b, d, e)),
    ]
    for i, (bar, (p1, p2, p3)) in enumerate(specs):
        fresh = range(32 * i + 1, 32 * i + 33)
        clauses.extend(_m_instance_clauses(fresh, (p1, -p2, -p3), negate=bar))
    for t in ONCE_POSITIVE_VARS:
        clauses.append(canonical_clause((t, 32 + t, 64 + t)))
        clauses.append(canonical_clause((-(96 + t), -(128 + t), -(160 + t))))
    symbols = {32 * i + t: f"{TEMPLATE_SYMBOLS[t]}^{i + 1}" for i in range(6) for t in range(1, 33)}
    symbols |= {193 + k: s for k, s in enumerate("abcdef")}
    return CnfFormula(198, tuple(clauses), False, symbols)


def build_U_NAE() -> CnfFormula:
    """Seven all-positive clauses whose variable graph is complete on 7 vertices."""
    clauses = (
        (1, 2, 7),
        (1, 3, 6),
        (1, 4, 5),
        (2, 3, 4),
        (2, 5, 6),
        (3, 5, 7),
        (4, 6, 7),
    )
    return cnf(clauses, n_vars=7)
