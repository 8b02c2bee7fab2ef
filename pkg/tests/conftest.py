from fractions import Fraction as F

import pytest

from relbrauer import CurvePoint, WeierstrassCurve


@pytest.fixture
def order5_curve():
    # y^2 + y = x^3 - x^2 - 10x - 20, rational 5-torsion generated by (5, 5)
    return WeierstrassCurve(0, -1, 1, -10, -20)


@pytest.fixture
def order5_gen():
    return CurvePoint(F(5), F(5))


@pytest.fixture
def mixed_torsion_curve():
    # y^2 + xy + y = x^3 + x^2 - 10x - 10, torsion Z/4 x Z/2
    return WeierstrassCurve(1, 1, 1, -10, -10)


@pytest.fixture
def hyperelliptic_curve():
    # y^2 = x^3 - 48x
    return WeierstrassCurve(0, 0, 0, -48, 0)


@pytest.fixture
def full_two_torsion_curve():
    # y^2 = x^3 - x
    return WeierstrassCurve(0, 0, 0, -1, 0)


@pytest.fixture
def rank_one_curve():
    # y^2 = x^3 - 2x + 2 has trivial torsion and the non-torsion point (1, 1)
    return WeierstrassCurve(0, 0, 0, -2, 2)
