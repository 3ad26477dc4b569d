import random

import pytest

from subwordkit import InputError
from subwordkit.experiments import (
    ExperimentReport, ExperimentRow, describe_experiment, experiment_ids,
    random_dfa, random_nfa, run_experiment,
)


EXPECTED_IDS = (
    "up-closure-exact",
    "down-closure-exact",
    "not-u-closure",
    "down-closure-strict",
    "two-letter-binomial",
    "two-letter-lemmas",
    "heam-growth",
    "dedekind-psi-bound",
    "down-interior-witness",
    "up-interior-witness",
    "ufa-rank",
    "decision-agreement",
    "fooling-exact",
)


def test_experiment_registry():
    assert experiment_ids() == EXPECTED_IDS
    for exp_id in EXPECTED_IDS:
        desc = describe_experiment(exp_id)
        assert isinstance(desc, str) and desc
    with pytest.raises(InputError):
        describe_experiment("frobnicate")
    with pytest.raises(InputError):
        run_experiment("frobnicate")
    with pytest.raises(InputError):
        run_experiment("up-closure-exact", {"no_such_knob": 3})


def test_row_and_report_semantics():
    with pytest.raises(InputError):
        ExperimentRow("p", 1, 1, "maybe")
    ok = ExperimentRow("p", 1, 1, "exact-match")
    bad = ExperimentRow("q", 2, 1, "mismatch")
    r = ExperimentReport("x", None, 0.1, (ok,))
    assert r.passed
    assert not ExperimentReport("x", None, 0.1, (ok, bad)).passed
    assert ExperimentReport("x", None, 0.1, ()).passed


def test_report_text_and_csv():
    rep = run_experiment("not-u-closure", {"ns": (1, 2)})
    text = rep.to_text()
    assert text.startswith("experiment: not-u-closure")
    assert "passed: yes" in text
    assert "param" in text and "verdict" in text
    csv_text = rep.to_csv()
    lines = csv_text.strip().splitlines()
    assert lines[0] == "experiment,param,measured,predicted,verdict"
    assert len(lines) == 1 + len(rep.rows)
    assert all(line.startswith("not-u-closure,") for line in lines[1:])
    # seedless experiments report no seed
    assert rep.seed is None and "seed:" not in text
    seeded = run_experiment("down-closure-strict", {"count": 5, "seed": 3})
    assert seeded.seed == 3 and "seed: 3" in seeded.to_text()


def test_frozen_cheap_rows():
    rep = run_experiment("up-closure-exact", {"ns": (3, 4, 5)})
    assert [(r.param, r.measured, r.predicted) for r in rep.rows] == [
        ("n=3", 3, 3), ("n=4", 5, 5), ("n=5", 9, 9)]
    assert all(r.verdict == "exact-match" for r in rep.rows)

    rep = run_experiment("down-closure-exact", {"ns": (2, 3, 4)})
    assert [r.measured for r in rep.rows] == [2, 4, 8]

    rep = run_experiment("not-u-closure", {"ns": (1, 2, 3)})
    assert [(r.param, r.measured) for r in rep.rows] == [
        ("n=1 states", 1), ("n=1 down closure", 1),
        ("n=2 states", 2), ("n=2 down closure", 3),
        ("n=3 states", 3), ("n=3 down closure", 7)]

    rep = run_experiment("heam-growth", {"states_ns": (2, 3), "phi_ns": (4,)})
    assert [(r.param, r.measured) for r in rep.rows] == [
        ("n=2 states", 9), ("n=3 states", 16), ("n=4 up closure", 60)]
    assert rep.rows[2].verdict == "bound-satisfied"

    rep = run_experiment("fooling-exact", {"ks": (1, 2)})
    by_param = {r.param: (r.measured, r.predicted) for r in rep.rows}
    assert by_param["U k=1 fooling"] == (2, 2)
    assert by_param["U k=2 minimal dfa"] == (4, 4)
    assert by_param["Uprime k=2 fooling"] == (5, 5)
    assert rep.passed


def test_determinism_at_fixed_seed():
    a = run_experiment("down-closure-strict", {"count": 40, "seed": 9})
    b = run_experiment("down-closure-strict", {"count": 40, "seed": 9})
    assert a.rows == b.rows
    c = run_experiment("down-closure-strict", {"count": 40, "seed": 10})
    assert c.rows != a.rows or c.seed != a.seed


def test_random_generators_reproducible():
    a = random_nfa(random.Random(5), 4, 2)
    b = random_nfa(random.Random(5), 4, 2)
    assert a == b
    d1 = random_dfa(random.Random(6), 5, 3)
    d2 = random_dfa(random.Random(6), 5, 3)
    assert d1 == d2
    assert a.n == 4 and a.k == 2 and d1.n == 5


def test_random_nfa_single_initial():
    rng = random.Random(7)
    for _ in range(20):
        a = random_nfa(rng, rng.randint(1, 6), 2, single_initial=True)
        assert len(a.initial) == 1
