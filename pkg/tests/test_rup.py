import pytest

from monoforge import refdata
from monoforge.formula import cnf
from monoforge.gadgets import build_y_core, build_z_core
from monoforge.rup import RupParseError, RupProof, RupStep, parse_rup, verify_rup
from monoforge.solver import Status, solve


def test_parse_roundtrip():
    lines = ["1 -2 0", "d 3 0", "0"]
    proof = parse_rup(lines)
    assert proof.steps == (
        RupStep((1, -2)), RupStep((3,), delete=True), RupStep(()))
    assert proof.lines() == lines
    assert parse_rup("\n".join(lines)) == proof


def test_parse_errors():
    with pytest.raises(RupParseError, match="terminator"):
        parse_rup(["1 2"])
    with pytest.raises(RupParseError, match="non-integer"):
        parse_rup(["1 x 0"])
    with pytest.raises(RupParseError, match="zero"):
        parse_rup(["1 0 2 0"])


def test_published_certificates_verify():
    assert verify_rup(build_y_core(), parse_rup(refdata.Y_CORE_PROOF_LINES))
    assert verify_rup(build_z_core(), parse_rup(refdata.Z_CORE_PROOF_LINES))


def test_empty_proof_on_satisfiable_formula_fails():
    check = verify_rup(cnf([[1]]), RupProof(()))
    assert not check.ok
    assert "empty clause" in check.message


def test_tampered_step_is_rejected():
    y = build_y_core()
    lines = list(refdata.Y_CORE_PROOF_LINES)
    lines[0] = "1 0"  # unit propagation from the negation finds no conflict
    check = verify_rup(y, parse_rup(lines))
    assert not check.ok
    assert check.failed_step == 0


def test_missing_empty_clause_rejected():
    y = build_y_core()
    lines = list(refdata.Y_CORE_PROOF_LINES)[:-1]
    check = verify_rup(y, parse_rup(lines))
    assert not check.ok
    assert check.failed_step is None


def test_deleting_absent_clause_is_ignored():
    y = build_y_core()
    lines = ["d 1 2 3 4 5 0"] + list(refdata.Y_CORE_PROOF_LINES)
    assert verify_rup(y, parse_rup(lines))


def test_deletions_matter_for_later_steps():
    f = cnf([[1, 2], [1, -2], [-1, 2], [-1, -2]])
    assert verify_rup(f, parse_rup(["1 0", "0"]))
    # with {1,2} deleted first, the unit 1 is no longer implied
    damaged = verify_rup(f, parse_rup(["d 1 2 0", "1 0", "0"]))
    assert not damaged.ok and damaged.failed_step == 1


def test_root_implications_survive_deletion():
    # forward checking keeps implications already propagated at the root
    f = cnf([[1], [-1, 2], [-2, 3]])
    check = verify_rup(f, parse_rup(["d 1 0", "3 0"]))
    assert check.failed_step is None  # every step passed
    assert not check.ok  # but no empty clause was derived


def test_solver_traces_verify_on_random_unsat(sat22_corpus):
    checked = 0
    for f in sat22_corpus:
        res = solve(f, trace=True)
        if res.status is Status.UNSAT:
            assert verify_rup(f, res.proof)
            checked += 1
    # fall back to a crafted instance if the corpus happened to be all-SAT
    if checked == 0:
        f = cnf([[1, 2], [1, -2], [-1, 2], [-1, -2]])
        res = solve(f, trace=True)
        assert res.status is Status.UNSAT and verify_rup(f, res.proof)
