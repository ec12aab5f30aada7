"""Conflict-driven clause learning with two watched literals.

The solver is deterministic: variable activities with a lazy heap (ties break
toward the smaller variable id), phase saving starting from all-false, and
Luby restarts.  With ``trace=True`` every learned clause is recorded in
order; on a global UNSAT answer the empty clause is appended, giving a proof
that :func:`monoforge.rup.verify_rup` accepts.

Assumptions are asserted as the first decisions, so one solver instance can
decide a fixed matrix under many partial assignments while keeping its
learned clauses (they are consequences of the clause set alone).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .formula import Assignment, CnfFormula, satisfies
from .rup import RupProof

_ACT_RESCALE = 1e100
_ACT_DECAY = 0.95
_RESTART_BASE = 128


class Status(Enum):
    SAT = "sat"
    UNSAT = "unsat"
    BUDGET = "budget"


@dataclass
class SolveResult:
    status: Status
    model: Assignment | None = None
    proof: RupProof | None = None
    conflicts: int = 0


def _luby(i: int) -> int:
    """i-th element (1-based) of the Luby restart sequence 1,1,2,1,1,2,4,..."""
    size, seq = 1, 0
    x = i - 1
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) // 2
        seq -= 1
        x = x % size
    return 1 << seq


def _ilit(e: int) -> int:
    return (e << 1) if e > 0 else ((-e << 1) | 1)


def _elit(i: int) -> int:
    v = i >> 1
    return -v if (i & 1) else v


class Solver:
    def __init__(
        self,
        formula: CnfFormula,
        conflict_budget: int = 1_000_000,
        trace: bool = False,
    ):
        self.formula = formula
        n = formula.n_vars
        self.n = n
        self.conflict_budget = conflict_budget
        self.trace_enabled = trace
        self.trace_clauses: list[tuple[int, ...]] = []

        self.val = [0] * (n + 1)  # 0 unknown, 1 true, -1 false
        self.level_of = [0] * (n + 1)
        self.reason = [-1] * (n + 1)
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.watches: list[list[int]] = [[] for _ in range(2 * n + 2)]
        self.db: list[list[int]] = []
        self.activity = [0.0] * (n + 1)
        self.var_inc = 1.0
        self.heap: list[tuple[float, int]] = [(0.0, v) for v in range(1, n + 1)]
        heapq.heapify(self.heap)
        self.phase = [False] * (n + 1)
        self.seen = bytearray(n + 1)
        self.root_conflict = False
        self.pending_units: list[int] = []
        self.total_conflicts = 0

        for c in formula.clauses:
            lits: list[int] = []
            seen: set[int] = set()
            taut = False
            for e in c:
                i = _ilit(e)
                if i ^ 1 in seen:
                    taut = True
                    break
                if i in seen:
                    continue  # duplicate literals collapse for propagation
                seen.add(i)
                lits.append(i)
            if taut:
                continue
            if not lits:
                self.root_conflict = True
            elif len(lits) == 1:
                self.pending_units.append(lits[0])
            else:
                self._attach(lits)

    # -- literal and clause plumbing ------------------------------------

    def _attach(self, lits: list[int]) -> int:
        ci = len(self.db)
        self.db.append(lits)
        self.watches[lits[0]].append(ci)
        self.watches[lits[1]].append(ci)
        return ci

    def _lit_true(self, i: int) -> bool:
        v = self.val[i >> 1]
        return v != 0 and (v > 0) == ((i & 1) == 0)

    def _enqueue(self, lit: int, reason: int) -> None:
        v = lit >> 1
        self.val[v] = -1 if (lit & 1) else 1
        self.level_of[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _backtrack(self, level: int) -> None:
        if len(self.trail_lim) <= level:
            return
        lim = self.trail_lim[level]
        activity = self.activity
        heap = self.heap
        for pos in range(len(self.trail) - 1, lim - 1, -1):
            lit = self.trail[pos]
            v = lit >> 1
            self.phase[v] = (lit & 1) == 0
            self.val[v] = 0
            self.reason[v] = -1
            heapq.heappush(heap, (-activity[v], v))
        del self.trail[lim:]
        del self.trail_lim[level:]
        self.qhead = len(self.trail)

    def _bump(self, v: int) -> None:
        a = self.activity[v] + self.var_inc
        self.activity[v] = a
        if a > _ACT_RESCALE:
            scale = 1.0 / _ACT_RESCALE
            for u in range(1, self.n + 1):
                self.activity[u] *= scale
            self.var_inc *= scale
            self.heap = [(-self.activity[u], u) for u in range(1, self.n + 1) if self.val[u] == 0]
            heapq.heapify(self.heap)
        else:
            heapq.heappush(self.heap, (-a, v))

    def _pick_var(self) -> int:
        heap = self.heap
        val = self.val
        act = self.activity
        while heap:
            nact, v = heapq.heappop(heap)
            if val[v] == 0 and -nact == act[v]:
                return v
        return 0

    # -- search core ------------------------------------------------------

    def _propagate(self) -> int:
        """Propagate pending trail literals; return conflict clause index or -1."""
        val = self.val
        db = self.db
        watches = self.watches
        while self.qhead < len(self.trail):
            p = self.trail[self.qhead]
            self.qhead += 1
            fl = p ^ 1
            ws = watches[fl]
            keep: list[int] = []
            idx = 0
            nws = len(ws)
            while idx < nws:
                ci = ws[idx]
                idx += 1
                c = db[ci]
                if c[0] == fl:
                    c[0] = c[1]
                    c[1] = fl
                w0 = c[0]
                v0 = val[w0 >> 1]
                if v0 != 0 and (v0 > 0) == ((w0 & 1) == 0):
                    keep.append(ci)  # satisfied by the other watch
                    continue
                moved = False
                for k in range(2, len(c)):
                    lk = c[k]
                    vk = val[lk >> 1]
                    if vk == 0 or (vk > 0) == ((lk & 1) == 0):
                        c[1] = lk
                        c[k] = fl
                        watches[lk].append(ci)
                        moved = True
                        break
                if moved:
                    continue
                keep.append(ci)
                if v0 != 0:
                    keep.extend(ws[idx:])
                    watches[fl] = keep
                    return ci  # conflict: both watches false
                self._enqueue(w0, ci)
            watches[fl] = keep
        return -1

    def _analyze(self, confl: int) -> tuple[list[int], int]:
        """First-UIP conflict analysis: (learned clause, backjump level)."""
        seen = self.seen
        level = self.level_of
        trail = self.trail
        cur = len(self.trail_lim)
        tail: list[int] = []
        touched: list[int] = []
        counter = 0
        p = -1
        c = self.db[confl]
        idx = len(trail) - 1
        while True:
            for q in c:
                if q == p:
                    continue
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = 1
                    touched.append(v)
                    self._bump(v)
                    if level[v] >= cur:
                        counter += 1
                    else:
                        tail.append(q)
            while True:
                pl = trail[idx]
                idx -= 1
                if seen[pl >> 1]:
                    break
            p = pl
            counter -= 1
            if counter == 0:
                break
            c = self.db[self.reason[p >> 1]]
        learnt = [p ^ 1] + tail
        for v in touched:
            seen[v] = 0
        if len(learnt) == 1:
            return learnt, 0
        # move a literal of the backjump level into the second watch slot
        bi = 1
        for k in range(2, len(learnt)):
            if level[learnt[k] >> 1] > level[learnt[bi] >> 1]:
                bi = k
        learnt[1], learnt[bi] = learnt[bi], learnt[1]
        return learnt, level[learnt[1] >> 1]

    def _record(self, learnt: Sequence[int]) -> None:
        if self.trace_enabled:
            self.trace_clauses.append(tuple(_elit(i) for i in learnt))

    def _result_unsat(self, conflicts: int) -> SolveResult:
        proof = None
        if self.trace_enabled:
            self.trace_clauses.append(())
            proof = RupProof.from_added_clauses(self.trace_clauses)
        return SolveResult(Status.UNSAT, proof=proof, conflicts=conflicts)

    def solve(self, assumptions: Iterable[int] = ()) -> SolveResult:
        """Decide the formula under the given assumption literals.

        Returns SAT with a verified total model, UNSAT (with a proof when
        tracing and no assumptions are involved), or BUDGET once the conflict
        budget is exhausted.  UNSAT under assumptions carries no proof.
        """
        used = 0
        if self.root_conflict:
            return self._result_unsat(0)
        self._backtrack(0)
        self.qhead = min(self.qhead, len(self.trail))
        for u in self.pending_units:
            v = u >> 1
            if self.val[v] == 0:
                self._enqueue(u, -1)
            elif not self._lit_true(u):
                self.root_conflict = True
                return self._result_unsat(0)
        assume = [_ilit(e) for e in assumptions]
        for i in assume:
            if not 1 <= (i >> 1) <= self.n:
                raise ValueError(f"assumption variable {i >> 1} out of range")
        restart_since = 0
        restart_idx = 1
        threshold = _luby(restart_idx) * _RESTART_BASE

        while True:
            confl = self._propagate()
            if confl >= 0:
                used += 1
                self.total_conflicts += 1
                if not self.trail_lim:
                    self.root_conflict = True
                    return self._result_unsat(used)
                learnt, bl = self._analyze(confl)
                self._backtrack(bl)
                self._record(learnt)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], -1)
                else:
                    ci = self._attach(learnt)
                    self._enqueue(learnt[0], ci)
                self.var_inc /= _ACT_DECAY
                restart_since += 1
                if used >= self.conflict_budget:
                    self._backtrack(0)
                    return SolveResult(Status.BUDGET, conflicts=used)
                if restart_since >= threshold:
                    restart_since = 0
                    restart_idx += 1
                    threshold = _luby(restart_idx) * _RESTART_BASE
                    self._backtrack(0)
                continue

            dl = len(self.trail_lim)
            if dl < len(assume):
                a = assume[dl]
                v = a >> 1
                if self.val[v] == 0:
                    self.trail_lim.append(len(self.trail))
                    self._enqueue(a, -1)
                elif self._lit_true(a):
                    self.trail_lim.append(len(self.trail))  # already implied
                else:
                    self._backtrack(0)
                    return SolveResult(Status.UNSAT, conflicts=used)
                continue

            v = self._pick_var()
            if v == 0:
                model = {u: self.val[u] > 0 for u in range(1, self.n + 1)}
                self._backtrack(0)
                if not satisfies(self.formula, model):
                    raise AssertionError("internal error: model fails verification")
                return SolveResult(Status.SAT, model=model, conflicts=used)
            lit = (v << 1) | (0 if self.phase[v] else 1)
            self.trail_lim.append(len(self.trail))
            self._enqueue(lit, -1)


def solve(
    f: CnfFormula,
    *,
    trace: bool = False,
    conflict_budget: int = 1_000_000,
    assumptions: Iterable[int] = (),
) -> SolveResult:
    """One-shot decision procedure; see :class:`Solver` for the contract."""
    return Solver(f, conflict_budget=conflict_budget, trace=trace).solve(assumptions)
