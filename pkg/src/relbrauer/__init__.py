"""Exact computation of relative Brauer groups of genus-1 curves over Q.

A genus-1 curve without rational points, presented as a twist of its
Jacobian elliptic curve E by a cyclic cocycle through a rational torsion
point, splits exactly the Brauer classes of Q produced by pairing rational
points of E with the cocycle.  This package computes that pairing in exact
rational arithmetic: torsion subgroups, function-field manipulations, the
constant-valued 2-cocycles, and the resulting cyclic-algebra classes with
splitting decisions where those are possible.
"""

from .brauer import (
    INFINITE_PLACE,
    BrauerEntry,
    BrauerPresentation,
    ClassStatus,
    CyclicAlgebraClass,
    Cyclotomic,
    Quadratic,
    RamifiedPrime,
    class_status,
    hilbert_symbol,
    kronecker_symbol,
    quaternion_class_equal,
    quaternion_group_invariants,
    quaternion_is_split,
    quaternion_witness,
    residue_degree,
    unramified_obstruction,
)
from .cocycle import (
    NonConstantCocycleValue,
    RationalCocycle,
    TwoCocycle,
    brauer_pairing,
    cocycle_function,
    cocycle_function_divisor,
    cyclic_reduce,
    line_function,
    relative_brauer,
    sum_witness,
    two_cocycle,
    verify_two_cocycle,
)
from .curve import (
    IDENTITY_MAP,
    INFINITY,
    CurvePoint,
    ModelMap,
    PointNotOnCurve,
    SingularCurve,
    WeierstrassCurve,
    to_short_integral,
)
from .exact import (
    FactoringLimitExceeded,
    Poly,
    Rat,
    divisors,
    factor,
    is_probable_prime,
    mth_power_free_part,
    poly_gcd,
)
from .funcfield import (
    INDETERMINATE,
    POLE,
    DivisionByZeroFunction,
    EllFn,
    FormalDivisor,
)
from .torsion import ORDER_BOUND, TorsionGroup, torsion_subgroup

__version__ = "0.1.0"

__all__ = [
    "BrauerEntry",
    "BrauerPresentation",
    "ClassStatus",
    "CurvePoint",
    "CyclicAlgebraClass",
    "Cyclotomic",
    "DivisionByZeroFunction",
    "EllFn",
    "FactoringLimitExceeded",
    "FormalDivisor",
    "IDENTITY_MAP",
    "INDETERMINATE",
    "INFINITE_PLACE",
    "INFINITY",
    "ModelMap",
    "NonConstantCocycleValue",
    "ORDER_BOUND",
    "POLE",
    "PointNotOnCurve",
    "Poly",
    "Quadratic",
    "RamifiedPrime",
    "Rat",
    "RationalCocycle",
    "SingularCurve",
    "TorsionGroup",
    "TwoCocycle",
    "WeierstrassCurve",
    "brauer_pairing",
    "class_status",
    "cocycle_function",
    "cocycle_function_divisor",
    "cyclic_reduce",
    "divisors",
    "factor",
    "hilbert_symbol",
    "is_probable_prime",
    "kronecker_symbol",
    "line_function",
    "mth_power_free_part",
    "poly_gcd",
    "quaternion_class_equal",
    "quaternion_group_invariants",
    "quaternion_is_split",
    "quaternion_witness",
    "relative_brauer",
    "residue_degree",
    "sum_witness",
    "to_short_integral",
    "torsion_subgroup",
    "two_cocycle",
    "unramified_obstruction",
    "verify_two_cocycle",
]
