import os
import subprocess
import sys

from monoforge import kernels
from monoforge.formula import cnf
from monoforge.gadgets import build_U_NAE, build_y_core
from monoforge.generate import random_3sat22, random_mono_nae_e2


def both_backends():
    impls = [("numpy", kernels.count_sat_numpy, kernels.collect_sat_numpy, kernels.first_nae_numpy)]
    if kernels.HAVE_NUMBA:
        impls.append(("numba", kernels.count_sat_numba, kernels.collect_sat_numba, kernels.first_nae_numba))
    return impls


def test_backend_parity_on_corpus():
    formulas = [random_3sat22(n, seed) for n, seed in ((6, 1), (9, 2), (12, 3))]
    formulas += [build_y_core(), build_U_NAE(), cnf([], n_vars=4), cnf([[1, 2, 3]])]
    results = {}
    for name, count, collect, nae in both_backends():
        for i, f in enumerate(formulas):
            lits, widths = kernels.clause_arrays(f.clauses)
            c = count(lits, widths, f.n_vars, (1 << f.n_vars) + 1)
            idxs = tuple(int(x) for x in collect(lits, widths, f.n_vars, 50))
            first = nae(lits, widths, f.n_vars)
            results.setdefault(i, []).append((c, idxs, first))
    for i, rs in results.items():
        assert all(r == rs[0] for r in rs), f"backend mismatch on formula {i}"


def test_count_limit_semantics():
    f = cnf([], n_vars=4)  # 16 models
    lits, widths = kernels.clause_arrays(f.clauses)
    for name, count, _, _ in both_backends():
        assert count(lits, widths, 4, 100) == 16
        assert count(lits, widths, 4, 5) == 5


def test_collect_cap_semantics():
    f = cnf([[1]], n_vars=3)  # 4 models: indices 1, 3, 5, 7
    lits, widths = kernels.clause_arrays(f.clauses)
    for name, _, collect, _ in both_backends():
        got = [int(x) for x in collect(lits, widths, 3, 10)]
        assert got == [1, 3, 5, 7]
        assert [int(x) for x in collect(lits, widths, 3, 2)] == [1, 3]


def test_first_nae():
    f = random_mono_nae_e2(6, 5)
    lits, widths = kernels.clause_arrays(f.clauses)
    for name, _, _, nae in both_backends():
        idx = nae(lits, widths, f.n_vars)
        assert idx >= 0
        values = {v: bool((idx >> (v - 1)) & 1) for v in range(1, 7)}
        for c in f.clauses:
            truths = [values[abs(l)] for l in c]
            assert any(truths) and not all(truths)


def test_env_flag_selects_numpy_backend():
    code = "import monoforge.kernels as k; print(k.active_backend())"
    env = dict(os.environ, MONOFORGE_BACKEND="numpy")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "numpy"


def test_active_backend_is_known():
    assert kernels.active_backend() in ("numba", "numpy")
