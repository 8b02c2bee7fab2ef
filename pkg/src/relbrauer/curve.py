"""Weierstrass models over Q.

Full five-coefficient models y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6,
the chord-tangent group law, point orders, and admissible changes of
variables down to a short integral model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import factor


class SingularCurve(Exception):
    """The discriminant vanishes, so there is no group law to work with."""


class PointNotOnCurve(Exception):
    pass


@dataclass(frozen=True)
class CurvePoint:
    """A rational point: affine coordinates, or the point at infinity (None, None)."""

    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("affine points need both coordinates")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @staticmethod
    def affine(x, y) -> "CurvePoint":
        return CurvePoint(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant() == 0:
            raise SingularCurve(f"discriminant vanishes for {self.equation()}")

    def b_invariants(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def equation(self) -> str:
        def side(pairs, constant):
            out = ""
            for coeff, sym in pairs:
                if coeff == 0:
                    continue
                mag = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
                out += (" - " if coeff < 0 else " + ") + mag + sym
            if constant != 0:
                out += (" - " if constant < 0 else " + ") + str(abs(constant))
            return out

        lhs = "y^2" + side([(self.a1, "x*y"), (self.a3, "y")], 0)
        rhs = "x^3" + side([(self.a2, "x^2"), (self.a4, "x")], self.a6)
        return f"{lhs} = {rhs}"

    def is_on_curve(self, p: CurvePoint) -> bool:
        if p.is_infinity:
            return True
        x, y = p.x, p.y
        lhs = y * y + self.a1 * x * y + self.a3 * y
        rhs = x**3 + self.a2 * x * x + self.a4 * x + self.a6
        return lhs == rhs

    def _require(self, p: CurvePoint) -> None:
        if not self.is_on_curve(p):
            raise PointNotOnCurve(f"{p} does not satisfy {self.equation()}")

    def negate(self, p: CurvePoint) -> CurvePoint:
        self._require(p)
        if p.is_infinity:
            return INFINITY
        return CurvePoint(p.x, -p.y - self.a1 * p.x - self.a3)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        self._require(p)
        self._require(q)
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        x1, y1 = p.x, p.y
        x2, y2 = q.x, q.y
        if x1 == x2 and y1 + y2 + self.a1 * x2 + self.a3 == 0:
            return INFINITY
        if p == q:
            denom = 2 * y1 + self.a1 * x1 + self.a3
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - self.a1 * y1) / denom
        else:
            lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
        x3 = lam * lam + self.a1 * lam - self.a2 - x1 - x2
        y3 = -(lam + self.a1) * x3 - nu - self.a3
        return CurvePoint(x3, y3)

    def multiply(self, n: int, p: CurvePoint) -> CurvePoint:
        self._require(p)
        if n < 0:
            return self.multiply(-n, self.negate(p))
        result = INFINITY
        addend = p
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            n >>= 1
        return result

    def point_order(self, p: CurvePoint, bound: int = 16) -> int | None:
        """Smallest n >= 1 with n*p = O, or None if it exceeds bound."""
        self._require(p)
        q = p
        for n in range(1, bound + 1):
            if q.is_infinity:
                return n
            q = self.add(q, p)
        return None


@dataclass(frozen=True)
class ModelMap:
    """Admissible change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.

    The substitution expresses source coordinates (x, y) through target
    coordinates (x', y'); push_point carries source points to the target
    model, pull_point carries them back.
    """

    u: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("u", "r", "s", "t"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.u == 0:
            raise ValueError("scaling factor u must be nonzero")

    def push_point(self, p: CurvePoint) -> CurvePoint:
        if p.is_infinity:
            return INFINITY
        xp = (p.x - self.r) / self.u**2
        yp = (p.y - self.s * (p.x - self.r) - self.t) / self.u**3
        return CurvePoint(xp, yp)

    def pull_point(self, p: CurvePoint) -> CurvePoint:
        if p.is_infinity:
            return INFINITY
        x = self.u**2 * p.x + self.r
        y = self.u**3 * p.y + self.s * self.u**2 * p.x + self.t
        return CurvePoint(x, y)

    def transform_curve(self, c: WeierstrassCurve) -> WeierstrassCurve:
        u, r, s, t = self.u, self.r, self.s, self.t
        a1 = (c.a1 + 2 * s) / u
        a2 = (c.a2 - s * c.a1 + 3 * r - s * s) / u**2
        a3 = (c.a3 + r * c.a1 + 2 * t) / u**3
        a4 = (c.a4 - s * c.a3 + 2 * r * c.a2 - (t + r * s) * c.a1 + 3 * r * r - 2 * s * t) / u**4
        a6 = (c.a6 + r * c.a4 + r * r * c.a2 + r**3 - t * c.a3 - t * t - r * t * c.a1) / u**6
        return WeierstrassCurve(a1, a2, a3, a4, a6)

    def then(self, second: "ModelMap") -> "ModelMap":
        """The composite map: apply self first, then second."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = second.u, second.r, second.s, second.t
        return ModelMap(
            u1 * u2,
            r1 + u1**2 * r2,
            s1 + u1 * s2,
            t1 + u1**2 * s1 * r2 + u1**3 * t2,
        )

    def inverse(self) -> "ModelMap":
        u, r, s, t = self.u, self.r, self.s, self.t
        return ModelMap(1 / u, -r / u**2, -s / u, (r * s - t) / u**3)


IDENTITY_MAP = ModelMap(1, 0, 0, 0)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def to_short_integral(c: WeierstrassCurve) -> tuple[WeierstrassCurve, ModelMap]:
    """Transform to y^2 = x^3 + A x + B with integer A, B.

    Returns (short_curve, phi) where phi.push_point maps points of c onto the
    short model.  Already-short integral curves come back unchanged with the
    identity map.
    """
    m1 = ModelMap(1, 0, -c.a1 / 2, -c.a3 / 2)
    c1 = m1.transform_curve(c)
    m2 = ModelMap(1, -c1.a2 / 3, 0, 0)
    c2 = m2.transform_curve(c1)
    scale = 1
    primes: set[int] = set()
    for den in (c2.a4.denominator, c2.a6.denominator):
        if den > 1:
            primes.update(factor(den)[1])
    for p in sorted(primes):
        v4 = _padic_valuation(c2.a4.denominator, p)
        v6 = _padic_valuation(c2.a6.denominator, p)
        scale *= p ** max(_ceil_div(v4, 4), _ceil_div(v6, 6))
    m3 = ModelMap(Fraction(1, scale), 0, 0, 0)
    c3 = m3.transform_curve(c2)
    assert c3.a1 == 0 and c3.a2 == 0 and c3.a3 == 0
    assert c3.a4.denominator == 1 and c3.a6.denominator == 1
    return c3, m1.then(m2).then(m3)


def _padic_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
