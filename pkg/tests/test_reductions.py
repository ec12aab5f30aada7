import random

import pytest

from monoforge.formula import (
    InstanceClass,
    InvalidInstanceError,
    cnf,
    satisfies,
    validate_class,
)
from monoforge.generate import random_mono_22
from monoforge.kernels import clause_arrays, count_sat
from monoforge.reductions import reduce_3sat22_to_mono22, reduce_star22_to_mono22
from monoforge.solver import Status, solve


def brute_sat(f) -> bool:
    lits, widths = clause_arrays(f.clauses)
    return count_sat(lits, widths, f.n_vars, 1) > 0


def test_star_reduction_identity_without_duplicates():
    f = random_mono_22(9, random.Random(1))  # strict monotone (2,2), no duplicates
    out = reduce_star22_to_mono22(f)
    assert out.formula.clauses == f.clauses
    assert out.stats.enforcers_used == 0
    assert out.stats.vars_added == 0


def test_star_reduction_replaces_duplicate_clause(star22_corpus):
    f = next(
        g for g in star22_corpus
        if any(len({abs(l) for l in c}) < 3 for c in g.clauses)
    )
    dups = sum(1 for c in f.clauses if len({abs(l) for l in c}) < 3)
    out = reduce_star22_to_mono22(f)
    assert out.stats.enforcers_used == dups
    assert out.stats.vars_added == 99 * dups
    assert out.stats.clauses_added == 133 * dups
    assert validate_class(out.formula, InstanceClass.MONO_3SAT_22).verdict


def test_star_reduction_rejects_invalid_input():
    bad = cnf([[1, -2, 3]], n_vars=3)
    with pytest.raises(InvalidInstanceError) as err:
        reduce_star22_to_mono22(bad)
    assert err.value.report.violations


def test_star_reduction_corpus(star22_corpus):
    for f in star22_corpus:
        out = reduce_star22_to_mono22(f)
        assert validate_class(out.formula, InstanceClass.MONO_3SAT_22).verdict
        res = solve(out.formula)
        assert res.status in (Status.SAT, Status.UNSAT)
        assert (res.status is Status.SAT) == brute_sat(f)
        assert len(out.provenance) == out.formula.m


def test_3sat22_reduction_monotone_input_passthrough():
    f = random_mono_22(9, random.Random(2))
    out = reduce_3sat22_to_mono22(f)
    assert out.stats.enforcers_used == 0
    assert out.formula.m == 3 * f.m
    assert out.formula.n_vars == 3 * f.n_vars
    assert validate_class(out.formula, InstanceClass.MONO_3SAT_22).verdict


def test_3sat22_reduction_corpus(sat22_corpus):
    for f in sat22_corpus:
        out = reduce_3sat22_to_mono22(f)
        assert validate_class(out.formula, InstanceClass.MONO_3SAT_22).verdict
        res = solve(out.formula)
        assert (res.status is Status.SAT) == brute_sat(f)
        assert len(out.provenance) == out.formula.m
        mixed = sum(1 for c in f.clauses if 1 <= sum(1 for l in c if l > 0) <= 2)
        assert out.stats.enforcers_used == mixed


def test_3sat22_model_transport(sat22_corpus):
    for f in sat22_corpus[:8]:
        out = reduce_3sat22_to_mono22(f)
        res = solve(out.formula)
        if res.status is not Status.SAT:
            continue
        restricted = {v: res.model[v] for v in range(1, f.n_vars + 1)}
        assert satisfies(f, restricted)


def test_provenance_covers_every_clause(sat22_corpus):
    f = sat22_corpus[0]
    out = reduce_3sat22_to_mono22(f)
    assert len(out.provenance) == out.formula.m
    kinds = {p.kind for p in out.provenance}
    assert kinds <= {"original", "gadget"}
    for p in out.provenance:
        assert 0 <= p.source_clause < f.m
