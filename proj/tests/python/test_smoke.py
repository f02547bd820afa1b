"""Smoke tests for the python bindings."""

import json

import pytest

import rtk


def test_root_data():
    assert rtk.positive_root_count("E8") == 120
    assert rtk.cartan_matrix("G2") == [[2, -1], [-3, 2]]
    assert rtk.reflect("A2", 1, [1, 0]) == [-1, 1]
    dom, stab = rtk.dominant_representative("A2", [-1, 1])
    assert dom == [1, 0] and stab == {2}
    assert rtk.longest_element_action("A4", [1, 0, 0, 0]) == [0, 0, 0, 1]
    assert rtk.orbit_size("E8", [0, 0, 0, 0, 0, 0, 0, 1]) == 240


def test_weight_calculus():
    assert rtk.weyl_dimension("C3", [0, 0, 1]) == 14
    assert rtk.weyl_dimension("E7", [0, 0, 0, 0, 0, 0, 1]) == 56
    assert rtk.freudenthal_multiplicity("E8", [0, 0, 0, 0, 0, 0, 0, 1], [0] * 8) == 8
    assert rtk.subdominant_weights("G2", [0, 1]) == [[0, 1], [1, 0], [0, 0]]
    ms = rtk.weight_multiset("B3", [1, 0, 0])
    assert ms["dim"] == 7 and ms["nonzero_mult_one"]


def test_classifier():
    assert rtk.omega1_membership("C3", [0, 0, 1], 7)
    assert not rtk.omega1_membership("A3", [0, 2, 0], 7)
    v = rtk.omega2_membership("C4", [0, 0, 0, 1], 7)
    assert v["in_omega2"] and not v["in_omega1"] and v["zero_mult"] == 2
    reg = rtk.regular_torus_verdict("G2", [0, 1], 0)
    assert reg["regular_torus"] and reg["overgroup"] == "SO_even"
    assert reg["overgroup_dim"] == 14
    assert rtk.steinberg_indicator("E7", [0, 0, 0, 0, 0, 0, 1]) == "symplectic"
    assert rtk.is_self_dual("A3", [0, 1, 0])


def test_reports_and_errors():
    j = json.loads(rtk.classify_json("C3", [0, 0, 1], 0))
    assert j["schema_version"] == rtk.schema_version == "rtk-report/1"
    assert j["verdicts"]["regular_torus"] is True
    with pytest.raises(rtk.RtkError):
        rtk.weyl_dimension("A2", [-1, 0])
    with pytest.raises(rtk.RtkError):
        rtk.omega1_membership("A2", [9, 0], 7)


def test_element_and_subsystem():
    assert rtk.element_regularity("C2", "2,3") == (True, True)
    assert rtk.element_regularity("B2", "-1,2") == (True, False)
    assert rtk.restrict_weight("C3", [[0, 1, 0], [0, 0, 1]], [2, 3, 1]) == [3, 1]


def test_exceptional_audit():
    rows = rtk.exceptional_audit()
    assert len(rows) == 26
    regular = [r for r in rows if r["regular_torus"]]
    assert len(regular) == 22
    b2 = [r for r in rows if r["M"] == "B2"]
    assert b2 and b2[0]["zero_weight_sum"] == 12


def test_verify_small():
    out = rtk.verify_tables("150")
    assert out["mismatches"] == []
    assert out["instances_checked"] > 50
