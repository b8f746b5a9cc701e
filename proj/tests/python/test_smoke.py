"""Smoke tests of the python module."""

import json

import pytest

import liegauge


def test_version():
    assert liegauge.__version__


def test_roots():
    doc = json.loads(liegauge.roots_json("A", 3))
    assert doc["schema"] == "1"
    assert len(doc["positive_roots"]) == 6
    assert doc["gamma"][2] == [1, 1, 1]


def test_basis_counts():
    doc = json.loads(liegauge.basis_json("G2", 2))
    assert doc["n"] == 7
    assert len(doc["X_plus"]) == 6


def test_theorem1_scalar_golden():
    assert liegauge.theorem1_scalar("A", 3) == "y^(4) - t1*y - t2*y' - t3*y''"


def test_theorem1_verify():
    doc = json.loads(liegauge.theorem1_json("C", 2, verify=True))
    assert doc["verified"] is True
    assert doc["epsilon"] == ["1", "1"]
    assert doc["rank_witness_nonzero"] is True


def test_reduce_round_trip():
    request = {
        "type": "A",
        "rank": 1,
        "field": "Cz",
        "entries": [["z", "1"], ["z^2", "-z"]],
    }
    doc = json.loads(liegauge.reduce_json(json.dumps(request)))
    assert doc["certified"] is True
    assert len(doc["specialization"]) == 1


def test_mitschi_singer():
    doc = json.loads(liegauge.mitschi_singer_json("A", 1, ["1"]))
    assert doc["matrix"] == [["z^2", "1"], ["1", "-z^2"]]
    assert doc["certified"] is True


def test_expr_canonical():
    assert liegauge.expr_canonical("(z^2-1)/(z-1)") == "z + 1"


def test_errors_surface_as_exceptions():
    with pytest.raises(RuntimeError):
        liegauge.roots_json("G2", 5)
    with pytest.raises(RuntimeError):
        liegauge.theorem1_scalar("D", 4)


def test_selftest():
    ok, report = liegauge.selftest(2)
    assert ok
    assert "PASS bracket-relations" in report
