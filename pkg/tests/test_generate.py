import random

import pytest

from monoforge.formula import InstanceClass, occurrence_profile, validate_class
from monoforge.generate import (
    GenerationError,
    random_3sat22,
    random_balanced_qbf,
    random_mono_22,
    random_mono_3sat_star22,
    random_mono_nae_e2,
)
from monoforge.qbf import BalanceSpec, validate_balanced


def test_determinism():
    assert random_3sat22(9, 5) == random_3sat22(9, 5)
    assert random_mono_3sat_star22(9, 5) == random_mono_3sat_star22(9, 5)
    assert random_mono_nae_e2(9, 5) == random_mono_nae_e2(9, 5)
    a = random_balanced_qbf(3, 1, 1, 5)
    b = random_balanced_qbf(3, 1, 1, 5)
    assert a.matrix == b.matrix and a.universals == b.universals


def test_divisibility_requirements():
    with pytest.raises(GenerationError):
        random_3sat22(7, 1)
    with pytest.raises(GenerationError):
        random_balanced_qbf(2, 2, 2, 1)  # (2,2) universals need p divisible by 3


def test_corpora_are_valid(star22_corpus, sat22_corpus, nae_corpus):
    for f in star22_corpus:
        assert validate_class(f, InstanceClass.MONO_3SAT_STAR_22).verdict
    for f in sat22_corpus:
        assert validate_class(f, InstanceClass.THREE_SAT_22).verdict
    for f in nae_corpus:
        assert validate_class(f, InstanceClass.MONO_NAE_E2).verdict


def test_star_corpus_exercises_duplicates(star22_corpus):
    dup_clauses = sum(
        1
        for f in star22_corpus
        for c in f.clauses
        if len({abs(l) for l in c}) < len(c)
    )
    assert dup_clauses > 0


def test_qbf_corpora_are_valid(qbf_1122_corpus, qbf_2222_corpus):
    for q in qbf_1122_corpus:
        assert validate_balanced(q, BalanceSpec(1, 1, 2, 2, require_equal_counts=True)).verdict
    for q in qbf_2222_corpus:
        assert validate_balanced(q, BalanceSpec(2, 2, 2, 2, require_equal_counts=True)).verdict


def test_mono22_profile():
    f = random_mono_22(9, random.Random(3))
    assert validate_class(f, InstanceClass.MONO_3SAT_22).verdict
    assert all(p == (2, 2) for _, p in occurrence_profile(f).items())
