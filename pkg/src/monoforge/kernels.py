"""Dense truth-table kernels for small-universe enumeration.

Assignment index convention: bit ``v - 1`` of the index is the value of
variable ``v``, so index 0 is the all-false assignment.  Each kernel exists
twice, as a numba-jitted loop and as a blocked pure-numpy fallback; both give
identical results.  Set ``MONOFORGE_BACKEND=numpy`` to force the fallback
(``numba`` selects the jitted path, the default when numba imports).
"""

from __future__ import annotations

import os

import numpy as np

_BLOCK = 1 << 14


def clause_arrays(clauses) -> tuple[np.ndarray, np.ndarray]:
    """Pack clauses into a zero-padded literal matrix plus a width vector."""
    m = len(clauses)
    w = max((len(c) for c in clauses), default=1)
    w = max(w, 1)
    lits = np.zeros((m, w), dtype=np.int64)
    widths = np.zeros(m, dtype=np.int64)
    for j, c in enumerate(clauses):
        widths[j] = len(c)
        for k, l in enumerate(c):
            lits[j, k] = l
    return lits, widths


# -- pure numpy fallback ----------------------------------------------------

def _block_masks(lits, widths, idx):
    """Per-clause satisfaction masks for a block of assignment indices."""
    m = lits.shape[0]
    sat = np.ones(idx.shape[0], dtype=bool)
    for j in range(m):
        cl = np.zeros(idx.shape[0], dtype=bool)
        for k in range(int(widths[j])):
            l = int(lits[j, k])
            bit = (idx >> (abs(l) - 1)) & 1
            cl |= (bit == 1) if l > 0 else (bit == 0)
        sat &= cl
    return sat


def count_sat_numpy(lits, widths, n_vars: int, limit: int) -> int:
    total = 0
    n_assign = 1 << n_vars
    for start in range(0, n_assign, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, n_assign), dtype=np.int64)
        total += int(_block_masks(lits, widths, idx).sum())
        if total >= limit:
            return limit
    return total


def collect_sat_numpy(lits, widths, n_vars: int, cap: int) -> np.ndarray:
    """Indices of satisfying assignments, at most ``cap`` of them."""
    out: list[np.ndarray] = []
    found = 0
    n_assign = 1 << n_vars
    for start in range(0, n_assign, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, n_assign), dtype=np.int64)
        hits = idx[_block_masks(lits, widths, idx)]
        if found + hits.shape[0] >= cap:
            out.append(hits[: cap - found])
            return np.concatenate(out) if out else np.empty(0, np.int64)
        out.append(hits)
        found += hits.shape[0]
    return np.concatenate(out) if out else np.empty(0, np.int64)


def first_nae_numpy(lits, widths, n_vars: int) -> int:
    """First assignment index with a true and a false literal in every clause."""
    m = lits.shape[0]
    n_assign = 1 << n_vars
    for start in range(0, n_assign, _BLOCK):
        idx = np.arange(start, min(start + _BLOCK, n_assign), dtype=np.int64)
        ok = np.ones(idx.shape[0], dtype=bool)
        for j in range(m):
            some_true = np.zeros(idx.shape[0], dtype=bool)
            some_false = np.zeros(idx.shape[0], dtype=bool)
            for k in range(int(widths[j])):
                l = int(lits[j, k])
                bit = (idx >> (abs(l) - 1)) & 1
                true_here = (bit == 1) if l > 0 else (bit == 0)
                some_true |= true_here
                some_false |= ~true_here
            ok &= some_true & some_false
        where = np.nonzero(ok)[0]
        if where.shape[0]:
            return int(idx[where[0]])
    return -1


# -- numba path -------------------------------------------------------------

try:
    from numba import njit

    HAVE_NUMBA = True

    @njit(cache=True)
    def _count_sat_jit(lits, widths, n_vars, limit):  # pragma: no cover - jitted
        m = lits.shape[0]
        count = 0
        for a in range(1 << n_vars):
            ok = True
            for j in range(m):
                sat = False
                for k in range(widths[j]):
                    l = lits[j, k]
                    if l > 0:
                        if (a >> (l - 1)) & 1 == 1:
                            sat = True
                            break
                    else:
                        if (a >> (-l - 1)) & 1 == 0:
                            sat = True
                            break
                if not sat:
                    ok = False
                    break
            if ok:
                count += 1
                if count >= limit:
                    return count
        return count

    @njit(cache=True)
    def _collect_sat_jit(lits, widths, n_vars, cap):  # pragma: no cover - jitted
        m = lits.shape[0]
        out = np.empty(cap, np.int64)
        found = 0
        for a in range(1 << n_vars):
            ok = True
            for j in range(m):
                sat = False
                for k in range(widths[j]):
                    l = lits[j, k]
                    if l > 0:
                        if (a >> (l - 1)) & 1 == 1:
                            sat = True
                            break
                    else:
                        if (a >> (-l - 1)) & 1 == 0:
                            sat = True
                            break
                if not sat:
                    ok = False
                    break
            if ok:
                out[found] = a
                found += 1
                if found >= cap:
                    return out[:found]
        return out[:found]

    @njit(cache=True)
    def _first_nae_jit(lits, widths, n_vars):  # pragma: no cover - jitted
        m = lits.shape[0]
        for a in range(1 << n_vars):
            ok = True
            for j in range(m):
                some_true = False
                some_false = False
                for k in range(widths[j]):
                    l = lits[j, k]
                    if l > 0:
                        t = (a >> (l - 1)) & 1 == 1
                    else:
                        t = (a >> (-l - 1)) & 1 == 0
                    if t:
                        some_true = True
                    else:
                        some_false = True
                if not (some_true and some_false):
                    ok = False
                    break
            if ok:
                return a
        return -1

    def count_sat_numba(lits, widths, n_vars: int, limit: int) -> int:
        return int(_count_sat_jit(lits, widths, n_vars, limit))

    def collect_sat_numba(lits, widths, n_vars: int, cap: int) -> np.ndarray:
        if cap <= 0:
            return np.empty(0, np.int64)
        return _collect_sat_jit(lits, widths, n_vars, cap)

    def first_nae_numba(lits, widths, n_vars: int) -> int:
        return int(_first_nae_jit(lits, widths, n_vars))

except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False
    count_sat_numba = None
    collect_sat_numba = None
    first_nae_numba = None


_requested = os.environ.get("MONOFORGE_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(f"MONOFORGE_BACKEND must be 'numba' or 'numpy', got {_requested!r}")
_USE_NUMBA = HAVE_NUMBA and _requested != "numpy"


def active_backend() -> str:
    return "numba" if _USE_NUMBA else "numpy"


def count_sat(lits, widths, n_vars: int, limit: int) -> int:
    if _USE_NUMBA:
        return count_sat_numba(lits, widths, n_vars, limit)
    return count_sat_numpy(lits, widths, n_vars, limit)


def collect_sat(lits, widths, n_vars: int, cap: int) -> np.ndarray:
    if cap <= 0:
        return np.empty(0, np.int64)
    if _USE_NUMBA:
        return collect_sat_numba(lits, widths, n_vars, cap)
    return collect_sat_numpy(lits, widths, n_vars, cap)


def first_nae(lits, widths, n_vars: int) -> int:
    if _USE_NUMBA:
        return first_nae_numba(lits, widths, n_vars)
    return first_nae_numpy(lits, widths, n_vars)
