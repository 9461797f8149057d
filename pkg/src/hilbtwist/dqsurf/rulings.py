"""The two rulings of the quadric a X^2 + b Y^2 + c Z^2 + d W^2 = 0 over Q.

When abcd is a square the tangent plane at a rational point P' cuts the
quadric in two rational lines B1, B2 through P'.  A ruling is then the
pencil of planes through one of them: psi = [L1 : L2] where L1, L2 span the
linear forms vanishing on B.  The plane u L1 - s L2 = 0 meets the quadric in
B and a residual line A_p, p = [s:u], so that psi(A_p) = p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactq import is_square, proj_point, rat_sqrt, rat_str
from ..exactq.linalg import dot, nullspace, rank, rref, solve_combination
from .surface import DiagSurface


class NotSplitError(ValueError):
    """The quadric's rulings are not defined over Q (abcd is not a square)."""


def _vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in v)


def _form(v) -> tuple[Fraction, ...]:
    """Canonical scaling of a linear form: primitive integers, first nonzero positive."""
    return _vec(proj_point(v))


@dataclass(frozen=True)
class Line3:
    """A line in P^3 as the common zeros of two independent linear forms.

    Stored in reduced row echelon form, so equal lines compare equal.
    """

    M1: tuple[Fraction, ...]
    M2: tuple[Fraction, ...]

    @classmethod
    def from_forms(cls, f1: Sequence, f2: Sequence) -> "Line3":
        rows = rref([list(f1), list(f2)])
        if len(rows) != 2:
            raise ValueError("linear forms are dependent")
        return cls(_vec(rows[0]), _vec(rows[1]))

    @classmethod
    def through(cls, P1: Sequence, P2: Sequence) -> "Line3":
        forms = nullspace([list(P1), list(P2)])
        if len(forms) != 2:
            raise ValueError("points coincide")
        return cls.from_forms(*forms)

    def contains(self, P) -> bool:
        return dot(self.M1, P) == 0 and dot(self.M2, P) == 0

    def points(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        a, b = nullspace([list(self.M1), list(self.M2)])
        return _vec(a), _vec(b)

    def to_json(self) -> list[list[str]]:
        return [[rat_str(c) for c in self.M1], [rat_str(c) for c in self.M2]]


@dataclass(frozen=True)
class Ruling:
    index: int
    L1: tuple[Fraction, ...]
    L2: tuple[Fraction, ...]
    B: Line3
    coeffs: tuple[Fraction, ...]
    base: tuple[int, ...]

    def psi(self, X) -> tuple[int, int]:
        """[L1(X) : L2(X)] on the quadric, resolved along B by the tangent plane."""
        X = _vec(X)
        s, u = dot(self.L1, X), dot(self.L2, X)
        if s != 0 or u != 0:
            return proj_point((s, u))
        # X on B: the member of the pencil through X is its tangent plane
        tangent = [k * x for k, x in zip(self.coeffs, X)]
        ab = solve_combination(tangent, [self.L1, self.L2])
        if ab is None:
            raise ValueError(f"{X} is not on the quadric")
        alpha, beta = ab
        return proj_point((-beta, alpha))

    def plane(self, p) -> tuple[Fraction, ...]:
        s, u = proj_point(p)
        return tuple(u * l1 - s * l2 for l1, l2 in zip(self.L1, self.L2))

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "L1": [rat_str(c) for c in self.L1],
            "L2": [rat_str(c) for c in self.L2],
            "B": self.B.to_json(),
        }


def _bilinear(coeffs, u, v) -> Fraction:
    return sum((k * a * b for k, a, b in zip(coeffs, u, v)), Fraction(0))


def _binary_roots(A, B2, C):
    """Roots [r1:r2] of A r1^2 + B2 r1 r2 + C r2^2 (both rational or None)."""
    disc = B2 * B2 - 4 * A * C
    root = rat_sqrt(disc) if disc >= 0 else None
    if root is None or disc == 0:
        return None
    if A != 0:
        return [((-B2 + e * root) / (2 * A), Fraction(1)) for e in (1, -1)]
    # A = 0: r2 = 0 is one root, the other solves B2 r1 + C r2 = 0
    return [(Fraction(1), Fraction(0)), (-C, B2)]


def tangent_lines(S: DiagSurface, Pq) -> tuple[Line3, Line3]:
    """The two lines of the quadric through Pq, ordered by their direction vectors."""
    Pq = _vec(proj_point(Pq))
    if S.quadric(Pq) != 0:
        raise ValueError(f"{proj_point(Pq)} is not on the quadric of {S}")
    if not S.square_disc:
        raise NotSplitError(f"abcd is not a square for {S}; the rulings are not rational")
    T = [k * x for k, x in zip(S.coeffs, Pq)]
    plane = nullspace([T])
    # two vectors of the tangent plane completing Pq to a basis of it
    basis = []
    for v in plane:
        if rank([list(Pq)] + basis + [v]) == len(basis) + 2:
            basis.append(v)
        if len(basis) == 2:
            break
    v1, v2 = basis
    A = _bilinear(S.coeffs, v1, v1)
    B2 = 2 * _bilinear(S.coeffs, v1, v2)
    C = _bilinear(S.coeffs, v2, v2)
    roots = _binary_roots(A, B2, C)
    if roots is None:
        raise NotSplitError(f"tangent conic at {proj_point(Pq)} does not split over Q")
    idx = next(i for i, c in enumerate(Pq) if c != 0)
    directions = []
    for r1, r2 in roots:
        v = [r1 * a + r2 * b for a, b in zip(v1, v2)]
        v = [c - v[idx] / Pq[idx] * p for c, p in zip(v, Pq)]
        directions.append(proj_point(v))
    directions.sort(reverse=True)
    return tuple(Line3.through(Pq, dvec) for dvec in directions)


def rulings_at(S: DiagSurface, Pq) -> tuple[Ruling, Ruling]:
    """Both rulings from the quadric point Pq; ruling i is the pencil of planes through B_{3-i}."""
    Pq_int = proj_point(Pq)
    B1, B2 = tangent_lines(S, Pq_int)
    Pv = _vec(Pq_int)
    T = _form([k * x for k, x in zip(S.coeffs, Pv)])
    t_idx = next(i for i, c in enumerate(T) if c != 0)
    out = []
    for index, B in ((1, B2), (2, B1)):
        forms = [list(B.M1), list(B.M2)]
        # the other generator of the forms through B, with no t_idx component
        other = next(f for f in forms if rank([list(T), f]) == 2)
        other = [c - other[t_idx] / T[t_idx] * t for c, t in zip(other, T)]
        out.append(Ruling(index, T, _form(other), B, S.coeffs, Pq_int))
    return out[0], out[1]


def ruling_line(R: Ruling, p) -> Line3:
    """Residual line A_p of the plane u L1 - s L2 = 0 on the quadric, p = [s:u]."""
    plane = R.plane(p)
    b1, b2 = R.B.points()
    e = next(v for v in nullspace([list(plane)]) if rank([list(b1), list(b2), v]) == 3)
    k = R.coeffs
    # Q(alpha b1 + beta b2 + gamma e) = gamma (2 alpha <b1,e> + 2 beta <b2,e> + gamma Q(e))
    l_a, l_b, l_g = 2 * _bilinear(k, b1, e), 2 * _bilinear(k, b2, e), _bilinear(k, e, e)
    if l_a == 0 and l_b == 0:
        raise ValueError(f"degenerate parameter {proj_point(p)}: residual line is B")
    # two points of {l = 0} in the (alpha, beta, gamma) plane
    sols = nullspace([[l_a, l_b, l_g]])
    pts = [[a * x + b * y + g * z for x, y, z in zip(b1, b2, e)] for a, b, g in sols]
    A = Line3.through(*pts)
    assert A != R.B
    return A
