import io
import sys

import pytest

from subwordkit import (
    canonical_dfa, closure_dfa, down_interior, equivalent, gen_family,
    parse_automaton, parse_dfa, serialize_automaton, sigma_star_dfa,
)
from subwordkit.cli import main


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_family(tmp_path, name, param, fname=None):
    p = tmp_path / (fname or f"{name}{param}.aut")
    p.write_text(serialize_automaton(gen_family(name, param)))
    return str(p)


def test_gen_round_trip(capsys, tmp_path):
    out = tmp_path / "e2.aut"
    code, stdout, _ = run(capsys, ["gen", "E", "2", "--out", str(out)])
    assert code == 0 and stdout == ""
    assert parse_dfa(out.read_text()) == gen_family("E", 2)
    code, stdout, _ = run(capsys, ["gen", "heam", "2"])
    assert code == 0
    assert parse_dfa(stdout) == gen_family("heam", 2)


def test_gen_dot_format(capsys):
    code, stdout, _ = run(capsys, ["gen", "U", "1", "--format", "dot"])
    assert code == 0
    assert stdout.startswith("digraph automaton {")
    assert "doublecircle" in stdout


def test_gen_rejects_unknown_family(capsys):
    with pytest.raises(SystemExit):
        main(["gen", "W", "2"])
    assert "invalid choice" in capsys.readouterr().err


def test_minimize_via_stdio(capsys, monkeypatch):
    a = gen_family("notU", 3)
    code, stdout, _ = run(capsys, ["minimize", "--in", "-"],
                          stdin=serialize_automaton(a), monkeypatch=monkeypatch)
    assert code == 0
    assert parse_dfa(stdout) == canonical_dfa(a)


def test_closure_command(capsys, tmp_path):
    inp = write_family(tmp_path, "D", 3)
    out = tmp_path / "down.aut"
    code, _, _ = run(capsys, ["closure", "down", "--in", inp, "--out", str(out)])
    assert code == 0
    got = parse_dfa(out.read_text())
    assert got == closure_dfa(gen_family("D", 3), "down")
    assert got.n == 8


def test_interior_command(capsys, tmp_path):
    inp = write_family(tmp_path, "downIntWitness", 3)
    want = down_interior(gen_family("downIntWitness", 3))
    for method in ("antichain", "duality"):
        code, stdout, _ = run(capsys, ["interior", "down", "--method", method, "--in", inp])
        assert code == 0
        assert parse_dfa(stdout) == want


def test_decide_closed(capsys, tmp_path):
    u = write_family(tmp_path, "U", 2)
    code, stdout, _ = run(capsys, ["decide", "closed", "--direction", "up", "--in", u])
    assert code == 0 and stdout == "up-closed: yes\n"
    e = write_family(tmp_path, "E", 2)
    code, stdout, _ = run(capsys, ["decide", "closed", "--direction", "up", "--in", e])
    assert code == 1
    assert stdout == "up-closed: no\nwitness: a1 a1 a1\n"


def test_decide_inclusion_and_equal(capsys, tmp_path):
    d = write_family(tmp_path, "D", 2)
    e = write_family(tmp_path, "E", 2)
    code, stdout, _ = run(
        capsys, ["decide", "inclusion", "--direction", "down", "--in", e, "--in2", d])
    assert code == 0 and stdout == "closure-inclusion (down): yes\n"
    code, stdout, _ = run(
        capsys, ["decide", "inclusion", "--direction", "down", "--in", d, "--in2", e])
    assert code == 1
    assert stdout == "closure-inclusion (down): no\nwitness: a1 a2\n"
    code, stdout, _ = run(
        capsys, ["decide", "equal", "--direction", "down", "--in", d, "--in2", d])
    assert code == 0 and stdout == "closure-equal (down): yes\n"


def test_decide_universal(capsys, tmp_path):
    star = tmp_path / "star.aut"
    star.write_text(serialize_automaton(sigma_star_dfa(gen_family("U", 2).alphabet)))
    code, stdout, _ = run(capsys, ["decide", "universal", "--in", str(star)])
    assert code == 0 and stdout == "down-universal: yes\n"
    notu = write_family(tmp_path, "notU", 2)
    code, stdout, _ = run(capsys, ["decide", "universal", "--in", str(notu)])
    assert code == 1
    assert stdout == "down-universal: no\nwitness: a1 a2\n"


def test_decide_missing_arguments(capsys, tmp_path):
    e = write_family(tmp_path, "E", 2)
    code, _, err = run(capsys, ["decide", "closed", "--in", e])
    assert code == 2 and "needs --direction" in err
    code, _, err = run(capsys, ["decide", "inclusion", "--direction", "down", "--in", e])
    assert code == 2 and "needs --in2" in err


def test_bounds_fooling(capsys):
    code, stdout, _ = run(capsys, ["bounds", "fooling", "--family", "Uprime", "--param", "3"])
    assert code == 0
    assert stdout == "fooling set certified: any NFA needs at least 9 states\n"


def test_bounds_fooling_verification_failure(capsys):
    # notU's pairs form a rank certificate, not a fooling set
    code, _, err = run(capsys, ["bounds", "fooling", "--family", "notU", "--param", "2"])
    assert code == 4 and err.startswith("error:")
    assert "not in the language" in err


def test_bounds_rank(capsys):
    code, stdout, _ = run(capsys, ["bounds", "rank", "--n", "4"])
    assert code == 0 and stdout == "rank = 15\n"
    code, stdout, _ = run(capsys, ["bounds", "rank", "--family", "downD", "--param", "2"])
    assert code == 0
    assert stdout == "rank = 4\nUFA lower bound = 4\n"
    code, stdout, _ = run(
        capsys,
        ["bounds", "rank", "--family", "upE", "--param", "2", "--initial-excluded"])
    assert code == 0
    assert stdout == "rank = 4\nUFA lower bound = 5\n"
    code, _, err = run(capsys, ["bounds", "rank"])
    assert code == 2 and "error:" in err


def test_experiment_list_and_run(capsys, tmp_path):
    code, stdout, _ = run(capsys, ["experiment", "list"])
    assert code == 0
    lines = stdout.strip().splitlines()
    assert len(lines) == 13
    assert lines[0].startswith("up-closure-exact:")
    code, stdout, _ = run(capsys, ["experiment", "up-closure-exact"])
    assert code == 0
    assert stdout.startswith("experiment: up-closure-exact")
    assert "passed: yes" in stdout
    out = tmp_path / "rows.csv"
    code, stdout, _ = run(capsys, ["experiment", "not-u-closure", "--csv", "--out", str(out)])
    assert code == 0 and stdout == ""
    csv_lines = out.read_text().strip().splitlines()
    assert csv_lines[0] == "experiment,param,measured,predicted,verdict"
    assert len(csv_lines) == 13


def test_experiment_failure_and_unknown(capsys):
    code, stdout, _ = run(capsys, ["experiment", "two-letter-lemmas"])
    assert code == 1 and "passed: no" in stdout
    code, _, err = run(capsys, ["experiment", "frobnicate"])
    assert code == 2 and "unknown experiment" in err


def test_input_error_paths(capsys, tmp_path):
    code, _, err = run(capsys, ["minimize", "--in", str(tmp_path / "missing.aut")])
    assert code == 2 and "error:" in err
    bad = tmp_path / "bad.aut"
    bad.write_text("alphabet a\nstates x\n")
    code, _, err = run(capsys, ["minimize", "--in", str(bad)])
    assert code == 2 and "line 2" in err


def test_budget_exit_code(capsys, tmp_path):
    d = write_family(tmp_path, "D", 5)
    code, _, err = run(capsys, ["closure", "down", "--in", d, "--budget", "10"])
    assert code == 3 and "budget" in err


def test_pipeline_gen_closure_decide(capsys, tmp_path):
    # a full round trip: family to file, closure to file, then decide on it
    e = write_family(tmp_path, "E", 3)
    closed = tmp_path / "up.aut"
    code, _, _ = run(capsys, ["closure", "up", "--in", e, "--out", str(closed)])
    assert code == 0
    code, stdout, _ = run(capsys, ["decide", "closed", "--direction", "up",
                                   "--in", str(closed)])
    assert code == 0 and stdout == "up-closed: yes\n"
    assert equivalent(parse_automaton(closed.read_text()),
                      closure_dfa(gen_family("E", 3), "up"))
