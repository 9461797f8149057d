"""Genus-1 models and explicit birational maps between them."""

from .maps import MapPair, MapStage, MapUndefinedError
from .quartic import (
    QuarticModel,
    binary_quartic_invariants,
    jacobian_from_invariants,
    quartic_to_weierstrass,
    substitution_map,
)
from .cubic import PLANE_VARS, PlaneCubic, cubic_to_weierstrass
from .spacecurve import SPACE_VARS, diagonal_quadric, project_space_quartic

__all__ = [
    "MapPair", "MapStage", "MapUndefinedError",
    "QuarticModel", "binary_quartic_invariants", "jacobian_from_invariants",
    "quartic_to_weierstrass", "substitution_map",
    "PLANE_VARS", "PlaneCubic", "cubic_to_weierstrass",
    "SPACE_VARS", "diagonal_quadric", "project_space_quartic",
]
