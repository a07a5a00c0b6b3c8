"""Halves of points on odd-degree hyperelliptic curves over F_p, via square roots."""

from .errors import JacsplitError
from .ff import FieldElement, FieldParams, field, is_square, sqrt
from .halving import (
    Half,
    SignVector,
    SqrtProfile,
    base_profile,
    enumerate_halves,
    flip,
    half_from_profile,
    profile_from_half,
    profile_new,
    verify_sign_theorem,
    weierstrass_translate,
)
from .jacobian import (
    INFINITY,
    AffinePoint,
    Curve,
    MumfordDivisor,
    cantor_add,
    cantor_double,
    curve_new,
    enumerate_two_torsion,
    make_point,
    mumford_validate,
    neg,
    point_on_curve,
    point_to_mumford,
    scalar_mul,
    two_torsion_point,
    weierstrass_point,
)
from .poly import Poly

__version__ = "0.1.0"
