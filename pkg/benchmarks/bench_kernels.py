#!/usr/bin/env python3
"""Compare the jitted and the pure-numpy enumeration kernels.

Times exact model counting and not-all-equal scanning on balanced random
instances of growing size.  Run directly:

    python benchmarks/bench_kernels.py [--sizes 15 18 21]
"""

from __future__ import annotations

import argparse
import time

from monoforge import kernels
from monoforge.generate import random_3sat22, random_mono_nae_e2


def time_call(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t)
    return result, best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="*", default=[12, 15, 18, 21])
    args = parser.parse_args()

    impls = [("numpy", kernels.count_sat_numpy, kernels.first_nae_numpy)]
    if kernels.HAVE_NUMBA:
        # warm up the jit so compile time is not measured
        f = random_3sat22(6, 0)
        lits, widths = kernels.clause_arrays(f.clauses)
        kernels.count_sat_numba(lits, widths, f.n_vars, 1 << 6)
        kernels.first_nae_numba(lits, widths, f.n_vars)
        impls.append(("numba", kernels.count_sat_numba, kernels.first_nae_numba))
    else:
        print("numba unavailable; timing the numpy path only")

    print(f"active backend: {kernels.active_backend()}")
    print(f"{'n':>4} {'kernel':>10} {'backend':>8} {'result':>10} {'seconds':>9}")
    for n in args.sizes:
        f = random_3sat22(n, seed=n)
        lits, widths = kernels.clause_arrays(f.clauses)
        limit = (1 << n) + 1
        for name, count, _ in impls:
            result, secs = time_call(count, lits, widths, n, limit)
            print(f"{n:>4} {'count_sat':>10} {name:>8} {result:>10} {secs:>9.4f}")
        g = random_mono_nae_e2(n, seed=n)
        glits, gwidths = kernels.clause_arrays(g.clauses)
        for name, _, nae in impls:
            result, secs = time_call(nae, glits, gwidths, n)
            print(f"{n:>4} {'first_nae':>10} {name:>8} {result:>10} {secs:>9.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
