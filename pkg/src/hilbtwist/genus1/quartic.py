"""Quartic models v^2 = q(u) and their Weierstrass forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..ellcurve import WeierstrassCurve
from ..exactq import MPoly, PolyQ, Q, RatFunc
from .maps import AFFINE, MapPair, MapStage, charts, single

QUARTIC_VARS = ("u", "v")
WEIERSTRASS_VARS = ("x", "y")


@dataclass(frozen=True)
class QuarticModel:
    """v^2 = a4 u^4 + a3 u^3 + a2 u^2 + a1 u + a0."""

    a4: Fraction
    a3: Fraction
    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __post_init__(self):
        for name in ("a4", "a3", "a2", "a1", "a0"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.a4 == 0 and self.a3 == 0:
            raise ValueError("quartic of degree < 3 does not define a genus-1 curve")
        I, J = binary_quartic_invariants(self)
        if 4 * I ** 3 == J ** 2:
            raise ValueError("quartic has a repeated root")

    @classmethod
    def from_poly(cls, q: PolyQ) -> "QuarticModel":
        if q.degree > 4:
            raise ValueError("degree > 4")
        return cls(q[4], q[3], q[2], q[1], q[0])

    @property
    def poly(self) -> PolyQ:
        return PolyQ((self.a0, self.a1, self.a2, self.a3, self.a4))

    def contains(self, P) -> bool:
        u, v = P
        return v * v == self.poly(u)


def binary_quartic_invariants(M) -> tuple[Fraction, Fraction]:
    """Classical invariants I, J of a4 u^4 + ... + a0 (accepts any object with a4..a0)."""
    a, b, c, d, e = (Q(M.a4), Q(M.a3), Q(M.a2), Q(M.a1), Q(M.a0))
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c ** 3
    return I, J


def jacobian_from_invariants(I, J) -> WeierstrassCurve:
    return WeierstrassCurve(-27 * I, -27 * J)


def long_to_short(a1, a2, a3, a4, a6):
    """Short model of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.

    Returns (A, B, b2/12); the change of variables is X = x + b2/12,
    Y = y + (a1 x + a3)/2.
    """
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    A = b4 / 2 - b2 * b2 / 48
    B = b6 / 4 - b2 * b4 / 24 + b2 ** 3 / 864
    return A, B, b2 / 12


def quartic_to_weierstrass(M: QuarticModel, P0) -> tuple[WeierstrassCurve, MapPair]:
    """Weierstrass model of v^2 = q(u) with explicit inverse maps.

    The marked point P0 goes to the point at infinity.  For v0 != 0 the
    classical completing transformation is used after moving u0 to 0; for
    v0 = 0 the root u0 is sent to infinity by u = u0 + 1/U.
    """
    u0, v0 = Q(P0[0]), Q(P0[1])
    if not M.contains((u0, v0)):
        raise ValueError(f"{(u0, v0)} is not on the quartic")
    if v0 != 0:
        return _completing(M, u0, v0)
    return _root_to_infinity(M, u0)


def _completing(M: QuarticModel, u0, q) -> tuple[WeierstrassCurve, MapPair]:
    shifted = M.poly.shift(u0)
    a, b, c, d = shifted[4], shifted[3], shifted[2], shifted[1]
    assert shifted[0] == q * q
    a1 = d / q
    a2 = c - d * d / (4 * q * q)
    a3 = 2 * q * b
    a4 = -4 * q * q * a
    a6 = a2 * a4
    A, B, sx = long_to_short(a1, a2, a3, a4, a6)
    E = WeierstrassCurve(A, B)

    u, v = MPoly.gens(QUARTIC_VARS)
    s = u - u0
    x_long = RatFunc((v + q).scale(2 * q) + s.scale(d), s * s)
    y_long = RatFunc((v + q).scale(4 * q * q) + (s.scale(d) + (s * s).scale(c)).scale(2 * q)
                     - (s * s).scale(d * d / (2 * q)), s * s * s)
    X = x_long + sx
    Y = y_long + (x_long * a1 + a3) * Fraction(1, 2)

    x, y = MPoly.gens(WEIERSTRASS_VARS)
    xl = x - sx
    yl = y - (xl.scale(a1) + a3).scale(Fraction(1, 2))
    # the long model is y(y + a1 x + a3) = (x + a2)(x^2 + a4), so s has two
    # expressions; the second covers (-a2, 0)
    s_charts = (RatFunc((xl + a2).scale(2 * q), yl),
                RatFunc((yl + xl.scale(a1) + a3).scale(2 * q), xl * xl + a4))
    back = []
    for s_back in s_charts:
        back.append((s_back + u0, s_back * (s_back * RatFunc(xl) - d) * (1 / (2 * q)) - q))

    other = (-a2 + sx, a1 * a2 - a3 + (a1 * -a2 + a3) / 2)
    stage = MapStage(
        QUARTIC_VARS, WEIERSTRASS_VARS, AFFINE, AFFINE,
        forward=charts((X, Y)),
        backward=charts(*back),
        special_forward=(((u0, q), None), ((u0, -q), other)),
        special_backward=((None, (u0, q)), (other, (u0, -q))),
        name="quartic->weierstrass (completing)",
    )
    return E, single(stage)


def _root_to_infinity(M: QuarticModel, u0) -> tuple[WeierstrassCurve, MapPair]:
    shifted = M.poly.shift(u0)
    assert shifted[0] == 0
    alpha, beta, gamma, delta = shifted[1], shifted[2], shifted[3], shifted[4]
    if alpha == 0:
        raise ValueError("marked root is not simple")
    # Y^2 = X^3 + beta X^2 + alpha gamma X + alpha^2 delta, X = alpha/(u - u0)
    A = alpha * gamma - beta * beta / 3
    B = alpha * alpha * delta - beta * alpha * gamma / 3 + 2 * beta ** 3 / 27
    E = WeierstrassCurve(A, B)

    u, v = MPoly.gens(QUARTIC_VARS)
    s = u - u0
    X = RatFunc(MPoly.const(QUARTIC_VARS, alpha), s) + beta / 3
    Y = RatFunc(v.scale(alpha), s * s)

    x, y = MPoly.gens(WEIERSTRASS_VARS)
    Xc = x - beta / 3
    u_back = RatFunc(Xc.scale(u0) + alpha, Xc)
    v_back = RatFunc(y.scale(alpha), Xc * Xc)
    stage = MapStage(
        QUARTIC_VARS, WEIERSTRASS_VARS, AFFINE, AFFINE,
        forward=charts((X, Y)),
        backward=charts((u_back, v_back)),
        special_forward=(((u0, 0), None),),
        special_backward=((None, (u0, 0)),),
        name="quartic->weierstrass (root to infinity)",
    )
    return E, single(stage)


def substitution_map(t, d) -> tuple[Fraction, Fraction]:
    """(t, d) on d^2 = t^4 - 1  ->  (x, y) on y^2 = x^3 + 4x."""
    t, d = Q(t), Q(d)
    x = 2 * (t * t - d)
    return x, 2 * t * x
