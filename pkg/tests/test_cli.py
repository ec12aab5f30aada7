import json

from monoforge import refdata
from monoforge.cli import main
from monoforge.fileio import read_dimacs, write_dimacs
from monoforge.gadgets import build_U, build_U_NAE, build_y_core
from monoforge.qbf import build_Q3, read_qdimacs, write_qdimacs
from monoforge.gadgets import FreshVarAllocator


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gadget_u_list_matches_reference(capsys):
    code, out, _ = run(capsys, "gadget", "U", "--format", "list")
    assert code == 0
    assert out.strip() == refdata.U_LIST_TEXT.strip()


def test_gadget_to_file_and_solve(tmp_path, capsys):
    path = tmp_path / "u.cnf"
    code, *_ = run(capsys, "gadget", "U", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "solve", "--in", str(path))
    assert code == 10
    assert "UNSATISFIABLE" in out


def test_gadget_with_ports(capsys):
    code, out, _ = run(capsys, "gadget", "S", "--ports", "1", "2", "3")
    assert code == 0
    f = read_dimacs(out)
    assert f.m == 133

    code, _, err = run(capsys, "gadget", "S", "--ports", "1", "2")
    assert code == 1
    assert "port" in err

    code, _, err = run(capsys, "gadget", "Menf", "--ports", "1", "1", "2")
    assert code == 1


def test_gadget_unknown_name(capsys):
    code, _, err = run(capsys, "gadget", "nosuch")
    assert code == 1 and "unknown gadget" in err


def test_validate_exit_codes(tmp_path, capsys):
    u = tmp_path / "u.cnf"
    u.write_text(write_dimacs(build_U()))
    code, out, _ = run(capsys, "validate", "--class", "mono3sat22", "--in", str(u))
    assert code == 0 and "valid" in out

    mixed = tmp_path / "mixed.cnf"
    mixed.write_text("p cnf 3 1\n1 -2 3 0\n")
    code, _, err = run(capsys, "validate", "--class", "mono3sat22", "--in", str(mixed))
    assert code == 20
    assert "monotone" in err


def test_solve_sat_exit_zero(tmp_path, capsys):
    f = tmp_path / "sat.cnf"
    f.write_text("p cnf 2 1\n1 2 0\n")
    code, out, _ = run(capsys, "solve", "--in", str(f))
    assert code == 0
    assert out.startswith("s SATISFIABLE")


def test_solve_trace_roundtrip(tmp_path, capsys):
    y = tmp_path / "y.cnf"
    y.write_text(write_dimacs(build_y_core()))
    proof = tmp_path / "y.rup"
    code, *_ = run(capsys, "solve", "--in", str(y), "--trace", str(proof))
    assert code == 10
    code, out, _ = run(capsys, "rup-check", "--in", str(y), "--proof", str(proof))
    assert code == 0 and "verified" in out


def test_rup_check_rejects(tmp_path, capsys):
    y = tmp_path / "y.cnf"
    y.write_text(write_dimacs(build_y_core()))
    bad = tmp_path / "bad.rup"
    bad.write_text("1 0\n0\n")
    code, _, err = run(capsys, "rup-check", "--in", str(y), "--proof", str(bad))
    assert code == 20 and "rejected" in err


def test_count(capsys, tmp_path):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 3 1\n1 2 3 0\n")
    code, out, _ = run(capsys, "count", "--in", str(f))
    assert code == 0 and out.strip() == "7"
    code, out, _ = run(capsys, "count", "--in", str(f), "--cap", "3")
    assert out.strip() == "3 (capped)"


def test_reduce_star22(tmp_path, capsys):
    src = tmp_path / "star.cnf"
    from monoforge.generate import random_mono_3sat_star22

    f = random_mono_3sat_star22(6, 1)
    src.write_text(write_dimacs(f))
    out_path = tmp_path / "mono.cnf"
    prov = tmp_path / "prov.json"
    code, *_ = run(
        capsys, "reduce", "--from", "star22", "--in", str(src),
        "--out", str(out_path), "--provenance", str(prov),
    )
    assert code == 0
    payload = json.loads(prov.read_text())
    assert "stats" in payload and "clauses" in payload
    reduced = read_dimacs(out_path.read_text())
    assert len(payload["clauses"]) == reduced.m


def test_reduce_rejects_wrong_class(tmp_path, capsys):
    src = tmp_path / "bad.cnf"
    src.write_text("p cnf 3 1\n1 -2 3 0\n")
    code, _, err = run(capsys, "reduce", "--from", "star22", "--in", str(src))
    assert code == 20


def test_qbf_check_and_transform(tmp_path, capsys):
    q3 = tmp_path / "q3.qdimacs"
    q3.write_text(write_qdimacs(build_Q3(FreshVarAllocator(1))))
    code, out, _ = run(capsys, "qbf", "check", "--in", str(q3))
    assert code == 0 and out.strip() == "yes"

    no = tmp_path / "no.qdimacs"
    no.write_text("p cnf 1 1\na 1 0\n1 0\n")
    code, out, _ = run(capsys, "qbf", "check", "--in", str(no))
    assert code == 10
    assert "counterexample" in out

    from monoforge.generate import random_balanced_qbf

    src = tmp_path / "b.qdimacs"
    src.write_text(write_qdimacs(random_balanced_qbf(2, 1, 1, 3)))
    dst = tmp_path / "mono.qdimacs"
    code, *_ = run(capsys, "qbf", "transform-1122", "--in", str(src), "--out", str(dst))
    assert code == 0
    out_q = read_qdimacs(dst.read_text())
    assert len(out_q.universals) == len(out_q.existentials)


def test_nae_subcommands(tmp_path, capsys):
    f = tmp_path / "nae.cnf"
    from monoforge.generate import random_mono_nae_e2

    inst = random_mono_nae_e2(9, 2)
    f.write_text(write_dimacs(inst))
    code, out, _ = run(capsys, "nae", "solve", "--in", str(f))
    assert code == 0 and out.startswith("v ")

    assignment = tmp_path / "a.txt"
    assignment.write_text(out[2:])
    code, out2, _ = run(capsys, "nae", "check", "--in", str(f), "--assignment", str(assignment))
    assert code == 0 and "nae-satisfied" in out2

    unae = tmp_path / "unae.cnf"
    unae.write_text(write_dimacs(build_U_NAE()))
    code, out3, _ = run(capsys, "nae", "graph", "--in", str(unae))
    assert code == 0
    assert len(out3.strip().splitlines()) == 21  # complete graph on 7


def test_nae_solve_rejects_invalid(tmp_path, capsys):
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 3 1\n1 2 3 0\n")
    code, _, err = run(capsys, "nae", "solve", "--in", str(bad))
    assert code == 20


def test_mine_command(tmp_path, capsys):
    best = tmp_path / "best.cnf"
    trace = tmp_path / "trace.json"
    code, out, _ = run(
        capsys, "mine", "--vars", "9", "--clauses", "12", "--seed", "1",
        "--iters", "40", "--out", str(best), "--trace", str(trace),
    )
    assert code == 0
    assert "best model count" in out
    payload = json.loads(trace.read_text())
    assert payload["entries"]
    read_dimacs(best.read_text())

    code, _, err = run(capsys, "mine", "--vars", "9", "--clauses", "13")
    assert code == 1 and "budget" in err


def test_selftest_command(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "checks passed" in out


def test_usage_errors(capsys):
    code, _, err = run(capsys, "gadget")
    assert code == 1
    code, _, err = run(capsys, "solve", "--in", "/nonexistent/file.cnf")
    assert code == 1 and "cannot read" in err


def test_qbf_rejects_unquantified_matrix(tmp_path, capsys):
    bad = tmp_path / "bad.qdimacs"
    bad.write_text("p cnf 3 1\n1 2 3 0\n")
    code, _, err = run(capsys, "qbf", "check", "--in", str(bad))
    assert code == 1 and "not quantified" in err


def test_nae_check_accepts_v_line_and_rejects_junk(tmp_path, capsys):
    from monoforge.generate import random_mono_nae_e2

    f = tmp_path / "nae.cnf"
    f.write_text(write_dimacs(random_mono_nae_e2(6, 3)))
    code, out, _ = run(capsys, "nae", "solve", "--in", str(f))
    assignment = tmp_path / "a.txt"
    assignment.write_text(out)  # keep the leading "v"
    code, out2, _ = run(capsys, "nae", "check", "--in", str(f), "--assignment", str(assignment))
    assert code == 0

    assignment.write_text("v x\n")
    code, _, err = run(capsys, "nae", "check", "--in", str(f), "--assignment", str(assignment))
    assert code == 1 and "invalid literal" in err
