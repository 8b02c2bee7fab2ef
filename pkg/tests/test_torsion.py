"""Lutz-Nagell torsion computation against curves with known torsion."""

from fractions import Fraction as F

import pytest

from relbrauer import INFINITY, CurvePoint, WeierstrassCurve, torsion_subgroup


def test_cyclic_order_five(order5_curve):
    t = torsion_subgroup(order5_curve)
    assert t.invariants == (5,)
    assert t.order == 5
    assert t.generators == ((CurvePoint(F(5), F(5)), 5),)
    assert t.describe() == "Z/5"
    assert t.elements == (
        INFINITY,
        CurvePoint(F(5), F(-6)),
        CurvePoint(F(5), F(5)),
        CurvePoint(F(16), F(-61)),
        CurvePoint(F(16), F(60)),
    )


def test_mixed_four_by_two(mixed_torsion_curve):
    t = torsion_subgroup(mixed_torsion_curve)
    assert t.invariants == (2, 4)
    assert t.order == 8
    assert t.describe() == "Z/4 x Z/2"
    (g1, n1), (g2, n2) = t.generators
    assert (n1, n2) == (4, 2)
    assert g1 == CurvePoint(F(-2), F(3))
    assert g2 == CurvePoint(F(-13, 4), F(9, 8))
    assert CurvePoint(F(8), F(18)) in t.elements
    assert CurvePoint(F(-1), F(0)) in t.elements
    assert CurvePoint(F(3), F(-2)) in t.elements


def test_generators_span_the_subgroup(mixed_torsion_curve):
    c = mixed_torsion_curve
    t = torsion_subgroup(c)
    spanned = set()
    (g1, n1), (g2, n2) = t.generators
    for i in range(n1):
        for j in range(n2):
            spanned.add(c.add(c.multiply(i, g1), c.multiply(j, g2)))
    assert spanned == set(t.elements)
    assert len(spanned) == n1 * n2


def test_full_two_torsion(full_two_torsion_curve):
    t = torsion_subgroup(full_two_torsion_curve)
    assert t.invariants == (2, 2)
    assert set(t.elements) == {
        INFINITY,
        CurvePoint(F(0), F(0)),
        CurvePoint(F(1), F(0)),
        CurvePoint(F(-1), F(0)),
    }


@pytest.mark.parametrize(
    "coeffs,invariants,generator",
    [
        ((0, 0, 0, 0, 1), (6,), CurvePoint(F(2), F(3))),
        ((0, 0, 1, 0, 0), (3,), CurvePoint(F(0), F(0))),
        ((0, 0, 0, 4, 0), (4,), CurvePoint(F(2), F(4))),
    ],
)
def test_known_cyclic_groups(coeffs, invariants, generator):
    t = torsion_subgroup(WeierstrassCurve(*coeffs))
    assert t.invariants == invariants
    assert t.generators[0][0] == generator


def test_trivial_torsion(rank_one_curve):
    t = torsion_subgroup(rank_one_curve)
    assert t.invariants == ()
    assert t.elements == (INFINITY,)
    assert t.describe() == "trivial"


def test_non_integral_model():
    # Lutz-Nagell runs on the cleared model and pulls points back
    t = torsion_subgroup(WeierstrassCurve(0, 0, 0, F(1, 4), 0))
    assert t.invariants == (4,)
    assert t.generators[0][0] == CurvePoint(F(1, 2), F(1, 2))


def test_all_elements_are_torsion(mixed_torsion_curve):
    c = mixed_torsion_curve
    t = torsion_subgroup(c)
    for p in t.elements:
        assert c.multiply(t.order, p) == INFINITY
