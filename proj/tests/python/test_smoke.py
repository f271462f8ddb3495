"""Smoke tests for the python bindings."""

import pytest

import solqsol


def test_show():
    doc = solqsol.show("D8")
    assert doc["group"]["order"] == 8
    assert doc["group"]["flags"]["nilpotent"] is True
    assert doc["group"]["histogram"] == {"1": 1, "2": 5, "4": 2}


def test_families():
    members = solqsol.qsol("D8")
    assert [m["order"] for m in members] == [1, 2, 8]
    assert [m["type"] for m in members] == ["C1", "C2", "D8"]

    sol_members = solqsol.sol("D8")
    assert [m["order"] for m in sol_members] == [1, 4, 8]
    assert sol_members[1]["type"] == "C4"

    assert solqsol.families("Q8", "subgroups")["family"]["count"] == 6


def test_group_order_and_products():
    assert solqsol.group_order("D6xD10") == 60
    assert solqsol.group_order("Ab(2:[1,2])") == 8


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        solqsol.show("Z9")
    with pytest.raises(RuntimeError):
        solqsol.show("C9999")


def test_lattice_dot():
    dot = solqsol.lattice_dot("D8", "normal")
    assert dot.startswith("digraph")
    assert dot.count("->") == 7


def test_verify_claim():
    result = solqsol.verify("prop-2.3")
    assert result["status"] == "refuted"
    assert result["witness"]["group"] == "D6xD10"
    assert result["witness"]["revalidated"] is True


def test_census_determinism():
    rows = solqsol.census(max_order=8, families_list=["cyclic", "dihedral"])
    assert len(rows) == 10
    assert rows == solqsol.census(max_order=8, families_list=["cyclic", "dihedral"])


def test_claim_ids():
    ids = solqsol.claim_ids()
    assert "thm-3.3" in ids and "eq-4" in ids and "cor-3.5" in ids
