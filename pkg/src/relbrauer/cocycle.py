"""Torsion-translation cocycles on an elliptic curve over Q.

The data (E, m, t) with [m]t = 0 encodes a homomorphism from a cyclic group
of order m into E(Q).  For each rational point p this produces, through line
functions on the curve, a 2-cocycle with constant rational values, which
collapses to a single scalar b; the pair (extension descriptor, b) is a
cyclic-algebra class in the relative Brauer group of the associated
homogeneous space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .brauer import (
    BrauerEntry,
    BrauerPresentation,
    CyclicAlgebraClass,
    Quadratic,
    class_status,
    quaternion_group_invariants,
)
from .curve import INFINITY, CurvePoint, WeierstrassCurve
from .exact import Poly, mth_power_free_part
from .funcfield import EllFn, FormalDivisor


class NonConstantCocycleValue(Exception):
    """A cocycle entry failed to reduce to a constant; this signals a bug in
    the pipeline, not bad input."""


def line_function(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint) -> EllFn:
    """Affine equation of the line through p and q on the curve.

    Tangent when p = q, vertical through the affine point when the other is
    at infinity, and the constant 1 when both are; the zero set (counted
    with the curve) is p + q + third intersection point.
    """
    curve._require(p)
    curve._require(q)
    if p.is_infinity and q.is_infinity:
        return EllFn.const(curve, 1)
    if p.is_infinity:
        return EllFn(curve, Poly((-q.x, 1)))
    if q.is_infinity:
        return EllFn(curve, Poly((-p.x, 1)))
    x1, y1 = p.x, p.y
    if p == q:
        slope_den = 2 * y1 + curve.a1 * x1 + curve.a3
        slope_num = 3 * x1 * x1 + 2 * curve.a2 * x1 + curve.a4 - curve.a1 * y1
        return EllFn(
            curve,
            Poly((slope_num * x1 - slope_den * y1, -slope_num)),
            Poly((slope_den,)),
        )
    x2, y2 = q.x, q.y
    return EllFn(
        curve,
        Poly((x2 * y1 - x1 * y2, y2 - y1)),
        Poly((-(x2 - x1),)),
    )


def sum_witness(curve: WeierstrassCurve, p1: CurvePoint, p2: CurvePoint) -> EllFn:
    """A function with divisor p1 + p2 - (p1 + p2 in the group) - infinity.

    Witnesses that the formal sum of two points and their group sum agree
    in the degree-zero class group.
    """
    total = curve.add(p1, p2)
    return line_function(curve, p1, p2) / line_function(curve, total, curve.negate(total))


def cocycle_function(curve: WeierstrassCurve, shift: CurvePoint, p: CurvePoint) -> EllFn:
    """The function with divisor (shift + p) + infinity - shift - p,
    normalized to weighted leading coefficient 1.

    The divisor determines the function only up to a scalar; the weighted
    normalization picks one representative deterministically, so downstream
    cocycle entries and the reduced scalar b are reproducible.  Whenever
    shift or p is infinity the result is exactly the constant 1.
    """
    total = curve.add(shift, p)
    numer = line_function(curve, total, curve.negate(total))
    denom = line_function(curve, shift, p)
    return (numer / denom).monic()


def cocycle_function_divisor(curve: WeierstrassCurve, shift: CurvePoint, p: CurvePoint) -> FormalDivisor:
    """The divisor contract of cocycle_function, with coincidences merged."""
    return FormalDivisor.from_pairs(
        (
            (curve.add(shift, p), 1),
            (INFINITY, 1),
            (shift, -1),
            (p, -1),
        )
    )


@dataclass(frozen=True)
class RationalCocycle:
    """The twisting data: a cyclic group of order m acting through the
    m-torsion point t, as the homomorphism i -> [i]t into E(Q)."""

    curve: WeierstrassCurve
    m: int
    t: CurvePoint

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("the cyclic order m must be a positive integer")
        self.curve._require(self.t)
        if not self.curve.multiply(self.m, self.t).is_infinity:
            raise ValueError(f"[{self.m}]t is not the identity; t must be m-torsion")

    def value(self, i: int) -> CurvePoint:
        """The point [i]t attached to the i-th group element."""
        return self.curve.multiply(i % self.m, self.t)


@dataclass(frozen=True)
class TwoCocycle:
    """An m-by-m table of nonzero rational cocycle values c(i, j)."""

    m: int
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError("the cyclic order m must be a positive integer")
        if len(self.values) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.values)}")
        rows = []
        for row in self.values:
            if len(row) != self.m:
                raise ValueError(f"expected {self.m} columns, got {len(row)}")
            entries = tuple(Fraction(v) for v in row)
            if any(v == 0 for v in entries):
                raise ValueError("cocycle values must be nonzero")
            rows.append(entries)
        object.__setattr__(self, "values", tuple(rows))

    def value(self, i: int, j: int) -> Fraction:
        return self.values[i % self.m][j % self.m]


def two_cocycle(cocycle: RationalCocycle, p: CurvePoint, rescale=None) -> TwoCocycle:
    """The constant-valued 2-cocycle attached to (cocycle, p).

    Entry (i, j) is f_i * (translate of f_j by [i]t) / f_{i+j}, where f_i is
    cocycle_function at shift [i]t; each such quotient has trivial divisor,
    hence is a constant.  An optional rescale vector multiplies each f_i by
    a nonzero constant (the first must stay 1): the table changes by a
    coboundary and the class is unchanged.
    """
    curve = cocycle.curve
    curve._require(p)
    m = cocycle.m
    shifts = [INFINITY]
    for _ in range(m - 1):
        shifts.append(curve.add(shifts[-1], cocycle.t))
    fs = [cocycle_function(curve, shift, p) for shift in shifts]
    if rescale is not None:
        scales = [Fraction(c) for c in rescale]
        if len(scales) != m:
            raise ValueError(f"rescale needs exactly {m} constants")
        if scales[0] != 1:
            raise ValueError("the identity-slot rescale constant must be 1")
        if any(c == 0 for c in scales):
            raise ValueError("rescale constants must be nonzero")
        fs = [f * c for f, c in zip(fs, scales)]
    inverses = [f.inverse() for f in fs]
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            entry = fs[i] * fs[j].translate(shifts[i]) * inverses[(i + j) % m]
            value = entry.is_constant()
            if value is None:
                raise NonConstantCocycleValue(f"entry ({i}, {j}) is not a constant")
            row.append(value)
        rows.append(tuple(row))
    return TwoCocycle(m, tuple(rows))


def verify_two_cocycle(tc: TwoCocycle) -> bool:
    """Check normalization (row and column 0 all ones) and the cocycle
    identity c(i,j) c(i+j,k) = c(j,k) c(i,j+k) over every index triple."""
    m, c = tc.m, tc.values
    if any(c[0][j] != 1 for j in range(m)):
        return False
    if any(c[i][0] != 1 for i in range(m)):
        return False
    for i in range(m):
        for j in range(m):
            ij = (i + j) % m
            for k in range(m):
                if c[i][j] * c[ij][k] != c[j][k] * c[i][(j + k) % m]:
                    return False
    return True


def cyclic_reduce(tc: TwoCocycle) -> Fraction:
    """Collapse a normalized table to the scalar b = c(1,1) c(2,1) ... c(m-1,1).

    The table is cohomologous to the standard cyclic cocycle taking the
    value b when exponents wrap past m, so b presents the same algebra.
    """
    m, c = tc.m, tc.values
    if any(c[0][j] != 1 for j in range(m)) or any(c[i][0] != 1 for i in range(m)):
        raise ValueError("cyclic reduction requires a normalized cocycle")
    b = Fraction(1)
    for i in range(1, m):
        b *= c[i][1]
    return b


def brauer_pairing(cocycle: RationalCocycle, p: CurvePoint, ext) -> CyclicAlgebraClass:
    """The Brauer class paired with the point p, as a cyclic algebra over ext.

    ext must be a degree-m extension descriptor; the class scalar is reported
    raw and in m-th-power-free form.
    """
    if ext.degree != cocycle.m:
        raise ValueError(
            f"extension degree {ext.degree} does not match cocycle order {cocycle.m}"
        )
    b = cyclic_reduce(two_cocycle(cocycle, p))
    return CyclicAlgebraClass(cocycle.m, ext, b, mth_power_free_part(b, cocycle.m))


def relative_brauer(cocycle: RationalCocycle, generators, ext) -> BrauerPresentation:
    """Image of a generating set of E(Q) under the Brauer pairing.

    generators is a sequence of (point, order) pairs, typically the
    generators of a torsion subgroup when the rank is asserted to be zero.
    The exact group structure is attached only in the quadratic m = 2 case;
    otherwise every class order divides m and statuses bound the rest.
    """
    entries = []
    for point, order in generators:
        algebra = brauer_pairing(cocycle, point, ext)
        entries.append(BrauerEntry(point, order, algebra, class_status(algebra)))
    invariants = None
    if cocycle.m == 2 and isinstance(ext, Quadratic):
        invariants = quaternion_group_invariants([e.algebra for e in entries])
    return BrauerPresentation(tuple(entries), invariants, cocycle.m)
