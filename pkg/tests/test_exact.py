"""Integer factoring, power-free parts, and exact polynomial arithmetic."""

import random
from fractions import Fraction as F

import pytest

from relbrauer.exact import (
    FactoringLimitExceeded,
    Poly,
    divisors,
    factor,
    is_probable_prime,
    mth_power_free_part,
    poly_gcd,
)

M61 = 2**61 - 1


def test_is_probable_prime_small():
    def sieve_prime(n):
        return n > 1 and all(n % d for d in range(2, n))

    for n in range(-2, 300):
        assert is_probable_prime(n) is sieve_prime(n), n


def test_is_probable_prime_known_hard_cases():
    assert is_probable_prime(M61)
    assert not is_probable_prime(561)  # Carmichael
    assert not is_probable_prime(3215031751)  # strong pseudoprime to 2,3,5,7
    assert not is_probable_prime(M61 * M61)


def test_factor_basic():
    assert factor(-432) == (-1, {2: 4, 3: 3})
    assert factor(1) == (1, {})
    assert factor(-1) == (-1, {})
    assert factor(97) == (1, {97: 1})
    sign, expo = factor(2**10 * 3**5 * 11)
    assert sign == 1 and expo == {2: 10, 3: 5, 11: 1}


def test_factor_zero_rejected():
    with pytest.raises(ValueError):
        factor(0)


def test_factor_reconstructs(monkeypatch):
    rng = random.Random(20240817)
    for _ in range(40):
        n = rng.randrange(2, 10**6)
        sign, expo = factor(n)
        prod = sign
        for p, e in expo.items():
            assert is_probable_prime(p)
            prod *= p**e
        assert prod == n


def test_factor_beyond_trial_division_uses_rho():
    n = 1000003 * 1000033  # both prime, above the default trial bound
    assert factor(n) == (1, {1000003: 1, 1000033: 1})


def test_factor_limit_exceeded():
    with pytest.raises(FactoringLimitExceeded):
        factor(M61 * M61, trial_bound=10, rho_cap=50)


def test_divisors():
    assert divisors(factor(12)[1]) == [1, 2, 3, 4, 6, 12]
    assert divisors({}) == [1]


def test_mth_power_free_part_known_values():
    assert mth_power_free_part(F(405), 4) == 5
    assert mth_power_free_part(F(-81), 4) == -1
    assert mth_power_free_part(F(-1, 48), 2) == -3
    assert mth_power_free_part(F(1, 10125), 4) == 5
    assert mth_power_free_part(F(-1, 11), 5) == 14641
    assert mth_power_free_part(F(64), 2) == 1
    assert mth_power_free_part(F(-64), 3) == 1  # (-4)^3
    assert mth_power_free_part(F(-64), 2) == -1


def test_mth_power_free_part_contract():
    # result times an exact m-th power recovers the input's class
    rng = random.Random(5)
    for _ in range(60):
        m = rng.randrange(2, 6)
        r = F(rng.randrange(1, 400), rng.randrange(1, 400)) * rng.choice((1, -1))
        part = mth_power_free_part(r, m)
        ratio = r / part
        assert mth_power_free_part(ratio, m) == 1
        _, expo = factor(part.numerator * part.denominator)
        assert all(0 < e < m for e in expo.values())
    with pytest.raises(ValueError):
        mth_power_free_part(F(0), 2)


def test_poly_construction_and_degree():
    assert Poly().is_zero
    assert Poly((0, 0)).is_zero
    assert Poly().degree == -1
    p = Poly((1, 0, F(2, 3)))
    assert p.degree == 2
    assert p.lc == F(2, 3)
    assert p(3) == 1 + 6
    with pytest.raises(ValueError):
        Poly().lc


def test_poly_arithmetic():
    x = Poly((0, 1))
    p = x**3 - 2 * x + 5
    q = x - 1
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree
    assert (p - p).is_zero
    assert p * Poly() == Poly()
    assert (x + 1) * (x - 1) == x**2 - 1


def test_poly_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(Poly((1, 1)), Poly())


def test_poly_gcd():
    x = Poly((0, 1))
    assert poly_gcd(x**2 - 1, x**2 - 2 * x + 1) == x - 1
    assert poly_gcd(Poly(), Poly()) == Poly()
    assert poly_gcd(3 * x + 3, Poly()) == x + 1
    # gcd is monic even when inputs are not
    g = poly_gcd(6 * (x - 2) * (x + 1), 4 * (x - 2) * x)
    assert g == x - 2


def test_poly_gcd_random_divides(monkeypatch):
    rng = random.Random(99)
    for _ in range(25):
        a = Poly([rng.randrange(-4, 5) for _ in range(rng.randrange(1, 5))])
        b = Poly([rng.randrange(-4, 5) for _ in range(rng.randrange(1, 5))])
        g = poly_gcd(a, b)
        if g.is_zero:
            assert a.is_zero and b.is_zero
            continue
        assert (a % g).is_zero and (b % g).is_zero
