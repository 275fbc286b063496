import json
import os
from pathlib import Path

import pytest

import genpos

FIXTURES = Path(os.environ.get("GENPOS_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_nu():
    assert genpos.nu(6, 2) == 2
    assert [genpos.nu(e, 1) for e in range(1, 6)] == [0, 1, 2, 3, 4]


def test_six_branch_tangents_not_generic():
    cert = genpos.points_check(load("six_branch_tangents.json"))
    assert cert["generic"] is False
    assert cert["failing_degree"] == 2
    assert genpos.hilbert_function(load("six_branch_tangents.json"), 3) == [1, 3, 4, 5]


def test_random_points_generic_and_seeded():
    a = genpos.random_points(6, 2, seed=3)
    assert a == genpos.random_points(6, 2, seed=3)
    assert genpos.points_check(a, t=5)["generic"] is True


def test_conductor_models():
    assert genpos.conductor(load("models/xy3_z3.json"))["verdict"] == "match"
    neg = genpos.conductor({"model": "semigroup", "generators": [2, 5]})
    assert neg["comparison"] == "mismatch"
    assert neg["verdict"] == "hypotheses-failed"
    lines = genpos.conductor({"model": "arrangement", "vars": 3, "forms": ["x0", "x1", "x2"]})
    assert lines["verdict"] == "match"


def test_semigroup():
    s = genpos.semigroup([3, 5])
    assert s["conductor"] == 8
    assert s["gaps"] == [1, 2, 4, 7]


def test_tangent_cone_six_branch_curve():
    report = genpos.tangent_cone(load("six_branch_curve.json"), e_guess=6)
    assert report["multiplicity"] == 6
    assert report["emdim"] == 3
    assert report["tangent_points_genericity"]["generic"] is False


def test_errors():
    with pytest.raises(ValueError):
        genpos.points_check("{not json")
    with pytest.raises(ValueError):
        genpos.semigroup([2, 4])
    big = genpos.random_points(12, 2, seed=1)
    with pytest.raises(genpos.ResourceError):
        genpos.points_check(big, t=6, subset_budget=10)


def test_run_cli():
    code, out, _ = genpos.run_cli(["points-check", str(FIXTURES / "six_branch_tangents.json")])
    assert code == 1
    assert "x1*x2" in out
