"""Intersections of two quadrics in P^3, projected from a rational point."""

from __future__ import annotations

from fractions import Fraction

from ..exactq import MPoly, RatFunc, linear_subs, proj_point
from .cubic import PLANE_VARS, PlaneCubic
from .maps import PROJECTIVE, MapPair, MapStage, charts, single

SPACE_VARS = ("x", "y", "z", "w")
_NEW = ("s", "X", "Y", "Z")


def diagonal_quadric(coeffs) -> MPoly:
    """sum c_i x_i^2 as an MPoly in x, y, z, w."""
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0, 0, 0, 0]
        e[i] = 2
        terms[tuple(e)] = c
    return MPoly(SPACE_VARS, terms)


def _frame4(R):
    idx = next(i for i, c in enumerate(R) if c != 0)
    cols = [list(R)]
    for j in range(4):
        if j != idx:
            e = [0, 0, 0, 0]
            e[j] = 1
            cols.append(e)
    return [[cols[c][r] for c in range(4)] for r in range(4)], idx


def _frame4_inverse(R, idx):
    """Inverse of _frame4: new = (x_idx / R_idx, x_j - R_j x_idx / R_idx for j != idx)."""
    r = Fraction(R[idx])
    rows = []
    first = [0, 0, 0, 0]
    first[idx] = 1 / r
    rows.append(first)
    for j in range(4):
        if j == idx:
            continue
        row = [0, 0, 0, 0]
        row[j] = 1
        row[idx] = -R[j] / r
        rows.append(row)
    return rows


def project_space_quartic(Q1: MPoly, Q2: MPoly, R) -> tuple[PlaneCubic, MapPair]:
    """Project the curve Q1 = Q2 = 0 from its point R to a plane cubic.

    In coordinates with R = [1:0:0:0] the quadrics read ``s l_i + q_i``; the
    image is ``l1 q2 - l2 q1 = 0`` and the tangent line at R projects to the
    point ``l1 = l2 = 0``, which becomes the marked point of the cubic.
    """
    R = proj_point(R)
    Q1, Q2 = Q1.rename(SPACE_VARS), Q2.rename(SPACE_VARS)
    if Q1(*R) != 0 or Q2(*R) != 0:
        raise ValueError(f"{R} is not on both quadrics")
    M, idx = _frame4(R)
    G1 = linear_subs(Q1, M, _NEW)
    G2 = linear_subs(Q2, M, _NEW)
    p1, p2 = G1.coefficients_in(0), G2.coefficients_in(0)
    assert 2 not in p1 and 2 not in p2

    def plane(p: MPoly | None) -> MPoly:
        if p is None:
            return MPoly(PLANE_VARS)
        return MPoly(PLANE_VARS, {e[1:]: c for e, c in p.terms.items()})

    l1, q1 = plane(p1.get(1)), plane(p1.get(0))
    l2, q2 = plane(p2.get(1)), plane(p2.get(0))
    v1 = [l1.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    v2 = [l2.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    T = (v1[1] * v2[2] - v1[2] * v2[1], v1[2] * v2[0] - v1[0] * v2[2], v1[0] * v2[1] - v1[1] * v2[0])
    if all(c == 0 for c in T):
        raise ValueError(f"the curve is singular at {R}")
    T = proj_point(T)
    if q1(*T) == 0 and q2(*T) == 0:
        raise ValueError("the tangent line at R lies on both quadrics")
    cubic = PlaneCubic(l1 * q2 - l2 * q1, T)

    Minv = _frame4_inverse(R, idx)
    gens = MPoly.gens(SPACE_VARS)
    fwd = []
    for row in Minv[1:]:
        acc = MPoly(SPACE_VARS)
        for c, g in zip(row, gens):
            if c != 0:
                acc = acc + g.scale(c)
        fwd.append(acc)

    X, Y, Z = MPoly.gens(PLANE_VARS)

    def lift(l: MPoly, q: MPoly):
        new = [-q, l * X, l * Y, l * Z]
        return [sum((n.scale(M[r][c]) for c, n in enumerate(new)), MPoly(PLANE_VARS)) for r in range(4)]

    stage = MapStage(
        SPACE_VARS, PLANE_VARS, PROJECTIVE, PROJECTIVE,
        forward=charts([RatFunc(f) for f in fwd]),
        backward=charts(lift(l1, q1), lift(l2, q2)),
        special_forward=((R, T),),
        special_backward=((T, R),),
        name="space quartic -> plane cubic (projection from R)",
    )
    return cubic, single(stage)
