"""Elliptic fibrations pi_i = psi_i o S of a diagonal quartic surface with square abcd.

The fiber over p is the preimage under the square map of the ruling line
A_p = {M1 = M2 = 0}, i.e. the curve M1(x^2, ..., w^2) = M2(x^2, ..., w^2) = 0,
an intersection of two diagonal quadrics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import sympy

from ..ellcurve import WeierstrassCurve
from ..exactq import PolyQ, proj_point, proj_str, rat_str
from ..exactq.linalg import nullspace, rank
from ..genus1 import MapPair, MapUndefinedError, cubic_to_weierstrass, diagonal_quadric, project_space_quartic
from .rulings import Line3, Ruling, ruling_line, rulings_at
from .surface import DiagSurface, contains, quadric_point_search, square_map

# height bound for the quadric point that pins the ruling gauge of a surface
GAUGE_SEARCH_HEIGHT = 30


class DegenerateFiberError(ValueError):
    pass


@lru_cache(maxsize=None)
def surface_rulings(S: DiagSurface) -> tuple[Ruling, Ruling]:
    """The fixed ruling pair of S: rulings at the first quadric point found."""
    Pq = quadric_point_search(S, GAUGE_SEARCH_HEIGHT)
    if Pq is None:
        raise ValueError(f"no quadric point of height <= {GAUGE_SEARCH_HEIGHT} on {S}")
    return rulings_at(S, Pq)


def _ruling(S: DiagSurface, i: int) -> Ruling:
    if i not in (1, 2):
        raise ValueError("fibration index must be 1 or 2")
    return surface_rulings(S)[i - 1]


@dataclass(frozen=True)
class Fiber:
    surface: DiagSurface
    index: int
    param: tuple[int, int]
    line: Line3
    smooth: bool = field(compare=False)

    @property
    def M1(self) -> tuple[Fraction, ...]:
        return self.line.M1

    @property
    def M2(self) -> tuple[Fraction, ...]:
        return self.line.M2

    def quadrics(self):
        return diagonal_quadric(self.M1), diagonal_quadric(self.M2)

    def contains(self, P) -> bool:
        sq = [Fraction(c) ** 2 for c in P]
        return self.line.contains(sq)

    def pencil_quartic(self) -> PolyQ:
        """det(tau M1 + M2) = prod(tau m1_j + m2_j), the binary quartic of the pencil (dehomogenised)."""
        out = PolyQ((1,))
        for a, b in zip(self.M1, self.M2):
            out = out * PolyQ((b, a))
        return out

    def to_json(self) -> dict:
        return {
            "i": self.index,
            "param": proj_str(self.param),
            "M1": [rat_str(c) for c in self.M1],
            "M2": [rat_str(c) for c in self.M2],
            "smooth": self.smooth,
        }


def _pencil_smooth(M1, M2) -> bool:
    # smooth iff the four singular members [m1_j : m2_j] of the pencil are distinct points of P^1
    pts = []
    for a, b in zip(M1, M2):
        if a == 0 and b == 0:
            return False
        pts.append(proj_point((a, b)))
    return len(set(pts)) == 4


def fiber(S: DiagSurface, i: int, p) -> Fiber:
    p = proj_point(p)
    A = ruling_line(_ruling(S, i), p)
    return Fiber(S, i, p, A, _pencil_smooth(A.M1, A.M2))


def pi(S: DiagSurface, i: int, P) -> tuple[int, int]:
    P = proj_point(P)
    if not contains(S, P):
        raise ValueError(f"{proj_str(P)} is not on {S}")
    return _ruling(S, i).psi(square_map(P))


def fiber_to_elliptic(F: Fiber, R) -> tuple[WeierstrassCurve, MapPair]:
    """Weierstrass model of the fiber with R at infinity, and the maps P^3 <-> E."""
    if not F.smooth:
        raise DegenerateFiberError(f"fiber over {proj_str(F.param)} is singular")
    R = proj_point(R)
    if not F.contains(R):
        raise ValueError(f"{proj_str(R)} is not on the fiber")
    Q1, Q2 = F.quadrics()
    cubic, proj = project_space_quartic(Q1, Q2, R)
    E, to_w = cubic_to_weierstrass(cubic)
    return E, proj.then(to_w)


@dataclass(frozen=True)
class FiberMultiples:
    points: tuple[tuple[int, ...], ...]
    torsion: bool
    order: int | None
    skipped: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "points": [proj_str(P) for P in self.points],
            "torsion": self.torsion,
            "order": self.order,
            "skipped": list(self.skipped),
        }


def fiber_multiples(F: Fiber, R, kmax: int) -> FiberMultiples:
    """Points backward([k] forward(R)) for 1 <= k <= kmax, deduplicated and verified."""
    E, maps = fiber_to_elliptic(F, R)
    W = maps.forward(R)
    order = E.torsion_order(W)
    torsion = order != "infinite"
    points, skipped, seen = [], [], set()
    acc = None
    for k in range(1, kmax + 1):
        acc = E.add(acc, W)
        try:
            P = maps.backward(acc)
        except MapUndefinedError:
            skipped.append(k)
            continue
        if not F.contains(P) or not contains(F.surface, P):
            raise AssertionError(f"multiple [{k}] left the fiber: {proj_str(P)}")
        if P not in seen:
            seen.add(P)
            points.append(P)
    return FiberMultiples(tuple(points), torsion, order if torsion else None, tuple(skipped))


_TAU = sympy.Symbol("tau")


def _poly_from_sympy(expr) -> PolyQ:
    coeffs = sympy.Poly(sympy.expand(expr), _TAU).all_coeffs()[::-1]
    return PolyQ(tuple(Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in coeffs))


def _sym(v):
    return [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in v]


def branch_sample(S: DiagSurface, i: int, t) -> PolyQ:
    """Squarefree monic polynomial in tau = s/u whose roots are the values of
    pi_{3-i} at the points of the fiber over t lying on xyzw = 0.

    For each coordinate j the line A_t meets {X_j = 0} in one point; tau is
    eliminated from det[M1; M2; e_j; L1' - tau L2'], which vanishes exactly
    when that point lies on the plane of the other pencil with parameter tau.
    A value at infinity contributes no factor.
    """
    F = fiber(S, i, t)
    if not F.smooth:
        raise DegenerateFiberError(f"fiber over {proj_str(F.param)} is singular")
    other = _ruling(S, 3 - i)
    total = PolyQ((1,))
    for j in range(4):
        e = [Fraction(int(k == j)) for k in range(4)]
        if rank([list(F.M1), list(F.M2), e]) < 3:
            raise DegenerateFiberError(f"fiber over {proj_str(F.param)} lies on a coordinate plane")
        rows = [_sym(F.M1), _sym(F.M2), _sym(e)]
        last = [l1 - _TAU * l2 for l1, l2 in zip(_sym(other.L1), _sym(other.L2))]
        factor = _poly_from_sympy(sympy.Matrix(rows + [last]).det())
        if factor.is_zero():
            # the point lies on the base line of the other pencil; resolve by tangency
            pt = _meet(F.line, j)
            s, u = other.psi(pt)
            factor = PolyQ((Fraction(-s), Fraction(u))) if u != 0 else PolyQ((1,))
        if factor.degree >= 1:
            total = total * factor
    if total.degree < 1:
        return PolyQ((1,))
    return total.squarefree_part().monic()


def _meet(A: Line3, j: int):
    e = [Fraction(int(k == j)) for k in range(4)]
    (v,) = nullspace([list(A.M1), list(A.M2), e])
    return v


def branch_nonconstant(S: DiagSurface, i: int, t1, t2) -> bool:
    return branch_sample(S, i, t1) != branch_sample(S, i, t2)
