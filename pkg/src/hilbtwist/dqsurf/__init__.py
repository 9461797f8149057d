"""Diagonal quartic surfaces, their square-map quadric and its two elliptic fibrations."""

from .surface import (
    FERMAT,
    DiagSurface,
    OmegaResult,
    OmegaVerdict,
    contains,
    omega_filter,
    quadric_point_search,
    square_map,
)
from .rulings import Line3, NotSplitError, Ruling, ruling_line, rulings_at, tangent_lines
from .fibers import (
    DegenerateFiberError,
    Fiber,
    FiberMultiples,
    branch_nonconstant,
    branch_sample,
    fiber,
    fiber_multiples,
    fiber_to_elliptic,
    pi,
    surface_rulings,
)

__all__ = [
    "FERMAT", "DiagSurface", "OmegaResult", "OmegaVerdict", "contains", "omega_filter",
    "quadric_point_search", "square_map",
    "Line3", "NotSplitError", "Ruling", "ruling_line", "rulings_at", "tangent_lines",
    "DegenerateFiberError", "Fiber", "FiberMultiples", "branch_nonconstant", "branch_sample",
    "fiber", "fiber_multiples", "fiber_to_elliptic", "pi", "surface_rulings",
]
