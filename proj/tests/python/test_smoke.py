from fractions import Fraction

import pytest

import codelat


def test_construction_a_of_ternary_code():
    c = codelat.Code(3, 3, [[1, 1, 1]])
    assert c.is_self_orthogonal()
    lat = codelat.construction_A(c)
    assert lat.rank == 6
    assert lat.is_even()
    assert len(codelat.roots(lat)) == 72
    assert lat == codelat.construction_A_preimage(c)


def test_construction_b_dual_minimum():
    c = codelat.Code(5, 2, [[1, 2]])
    lat = codelat.construction_B(c)
    assert lat.rank == 8
    assert codelat.min_norms(lat, 1)[0] == Fraction(2)


def test_catalog_and_equivalence():
    classes = codelat.enumerate_self_orthogonal(7, 3)
    assert len(classes) == 2
    g = codelat.equivalent(codelat.Code(7, 3, [[1, 2, 3]]), codelat.Code(7, 3, [[1, 5, 4]]))
    assert g is not None
    assert g.apply(codelat.Code(7, 3, [[1, 2, 3]])) == codelat.Code(7, 3, [[1, 5, 4]])


def test_isometry_and_recovery():
    c = codelat.Code(3, 4, [[0, 1, 1, 1]])
    d = codelat.Code(3, 4, [[1, 2, 0, 1]])
    assert codelat.is_isometric(codelat.construction_A(c), codelat.construction_A(d)) is not None
    back = codelat.recover_code(3, codelat.construction_A(c))
    assert codelat.equivalent(back, c) is not None


def test_root_system_type():
    lat = codelat.construction_A(codelat.Code(7, 3, [[1, 2, 3]]))
    assert sorted(codelat.root_system_type(lat)) == ["A6", "A6", "A6"]


def test_verify_suite_reports():
    report = codelat.verify_suite("dual-minimum", {"n_min": 2, "n_max": 6})
    assert report["suite"] == "dual-minimum"
    assert all(check["pass"] for check in report["checks"])
    assert "chain-counts" in codelat.suite_names()
    with pytest.raises(ValueError):
        codelat.verify_suite("no-such-suite")


def test_theorem_matrix_small():
    report = codelat.theorem_matrix(3, 3, "A")
    assert all(check["pass"] for check in report["checks"])
    assert report["summary"]["classes"] == 2


def test_bridge():
    assert codelat.bridge_ok(3, 2)
    assert codelat.bridge_ok(5, 2)
