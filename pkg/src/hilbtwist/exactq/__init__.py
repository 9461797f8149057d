"""Exact scalar layer: rationals, quadratic fields, polynomials, canonical points."""

from .rational import Q, Rat, is_square, parse_rat, rat_sqrt, rat_str, square_class_equal
from .quadext import QuadExt, proportional
from .poly import PolyQ, poly_gcd, rational_roots, resultant
from .mpoly import MPoly, RatFunc, linear_subs
from .points import (
    affine_to_p1,
    count_p1_by_height,
    enumerate_p1_by_height,
    height,
    p1_to_affine,
    parse_proj,
    proj_point,
    proj_str,
    projective_points_of_height,
    weighted_point,
)

__all__ = [
    "Q", "Rat", "is_square", "parse_rat", "rat_sqrt", "rat_str", "square_class_equal",
    "QuadExt", "proportional",
    "PolyQ", "poly_gcd", "rational_roots", "resultant",
    "MPoly", "RatFunc", "linear_subs",
    "affine_to_p1", "count_p1_by_height", "enumerate_p1_by_height", "height",
    "p1_to_affine", "parse_proj", "proj_point", "proj_str",
    "projective_points_of_height", "weighted_point",
]
