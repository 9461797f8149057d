"""Plane cubics with a rational point, reduced to Weierstrass form (Nagell).

The marked point O is moved to [0:1:0], so the cubic reads
``y^2 L(x,z) + y Q(x,z) + C(x,z)`` with ``L = 0`` the tangent at O.

* If O is a flex, L divides Q and a linear change of (x, z) with L -> z gives a
  long Weierstrass equation; O goes to infinity.
* Otherwise the lines through O cut out the double cover
  ``w^2 = Q(s,1)^2 - 4 L(s,1) C(s,1)`` with ``w = 2 L y + Q``; the tangent at O
  gives the rational point ``(s0, Q(s0,1))`` which corresponds to the third
  intersection of that tangent with the cubic, and goes to infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..ellcurve import WeierstrassCurve
from ..exactq import MPoly, PolyQ, Q, RatFunc, linear_subs, proj_point, rational_roots
from .maps import AFFINE, PROJECTIVE, MapPair, MapStage, charts, single
from .quartic import WEIERSTRASS_VARS, QuarticModel, long_to_short, quartic_to_weierstrass

PLANE_VARS = ("X", "Y", "Z")
_XI = ("x", "y", "z")


def _mat_inv3(M):
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise ValueError("singular matrix")
    det = Fraction(det)
    return [
        [(e * i - f * h) / det, (c * h - b * i) / det, (b * f - c * e) / det],
        [(f * g - d * i) / det, (a * i - c * g) / det, (c * d - a * f) / det],
        [(d * h - e * g) / det, (b * g - a * h) / det, (a * e - b * d) / det],
    ]


def _linear_images(matrix, variables):
    """Linear forms sum_j M[i][j] * var_j, one per row."""
    gens = MPoly.gens(variables)
    out = []
    for row in matrix:
        acc = MPoly(variables)
        for c, g in zip(row, gens):
            if c != 0:
                acc = acc + g.scale(c)
        out.append(acc)
    return out


def _gradient(F: MPoly, P):
    return [F.diff(i)(*P) for i in range(len(F.vars))]


def _has_rational_line_factor(F: MPoly) -> bool:
    """True iff the ternary cubic F has a linear factor over Q.

    Candidate lines are read off from rational roots of restrictions of F to
    two lines, then confirmed by exact substitution.
    """
    X, Y, Z = MPoly.gens(PLANE_VARS)
    T = MPoly.gens(("T", "S"))

    def vanishes_on(alpha, beta, gamma):
        # parametrise alpha X + beta Y + gamma Z = 0 and substitute
        t, s = T
        if alpha != 0:
            img = [(t.scale(-beta) + s.scale(-gamma)).scale(1 / Q(alpha)), t, s]
        elif beta != 0:
            img = [t, s.scale(-Q(gamma) / beta), s]
        else:
            img = [t, s, MPoly(("T", "S"))]
        return F.subs(img).is_zero()

    def univariate(images):
        return PolyQ(_as_univariate(F.subs(images)))

    # lines with nonzero X-coefficient: X = -(b Y + c Z)/a, pinned by two restrictions
    one = MPoly.const(("T",), 1)
    t = MPoly.var(("T",), "T")
    zero = MPoly(("T",))
    f0 = univariate([t, zero, one])   # Y = 0, Z = 1: root X = -c/a
    f1 = univariate([t, one, zero])   # Y = 1, Z = 0: root X = -b/a
    if not f0.is_zero() and not f1.is_zero():
        for r0 in rational_roots(f0):
            for r1 in rational_roots(f1):
                if vanishes_on(1, -r1, -r0):
                    return True
    elif f0.is_zero() and vanishes_on(0, 1, 0):
        return True
    elif f1.is_zero() and vanishes_on(0, 0, 1):
        return True
    # X-free lines b Y + c Z = 0
    g = univariate([zero, t, one])    # X = 0, Z = 1: root Y = -c/b
    if not g.is_zero():
        for r in rational_roots(g):
            if vanishes_on(0, 1, -r):
                return True
    return vanishes_on(0, 0, 1)


def _as_univariate(p: MPoly):
    coeffs = {}
    for e, c in p.terms.items():
        coeffs[e[0]] = c
    n = max(coeffs, default=-1)
    return [coeffs.get(i, 0) for i in range(n + 1)]


@dataclass(frozen=True)
class PlaneCubic:
    form: MPoly
    point: tuple

    def __post_init__(self):
        F = self.form
        if F.vars != PLANE_VARS:
            object.__setattr__(self, "form", F.rename(PLANE_VARS))
            F = self.form
        if not F.is_homogeneous() or F.degree() != 3:
            raise ValueError("a plane cubic must be a homogeneous form of degree 3")
        P = proj_point(self.point)
        object.__setattr__(self, "point", P)
        if F(*P) != 0:
            raise ValueError(f"marked point {P} is not on the cubic")
        if _has_rational_line_factor(F):
            raise ValueError("cubic is reducible over Q")

    def contains(self, P) -> bool:
        return self.form(*P) == 0

    def is_singular_at(self, P) -> bool:
        return all(g == 0 for g in _gradient(self.form, P))


def _frame(P, slot):
    """3x3 matrix (old = M * new) whose column ``slot`` is P, the rest unit vectors."""
    idx = next(i for i, c in enumerate(P) if c != 0)
    others = [j for j in range(3) if j != idx]
    cols = [None, None, None]
    cols[slot] = list(P)
    free = [k for k in range(3) if k != slot]
    for k, j in zip(free, others):
        e = [0, 0, 0]
        e[j] = 1
        cols[k] = e
    return [[cols[c][r] for c in range(3)] for r in range(3)]


def cubic_to_weierstrass(C: PlaneCubic) -> tuple[WeierstrassCurve, MapPair]:
    P = C.point
    if C.is_singular_at(P):
        raise ValueError(f"marked point {P} is singular on the cubic")
    N = _frame(P, slot=1)
    G = linear_subs(C.form, N, _XI)
    parts = G.coefficients_in(1)
    L = parts.get(2, MPoly(_XI))
    alpha, beta = L.coefficient((1, 0, 0)), L.coefficient((0, 0, 1))
    if alpha == 0:
        # keep the tangent line away from z = 0 so its slope s0 is finite
        N = [[row[2], row[1], row[0]] for row in N]
        G = linear_subs(C.form, N, _XI)
        parts = G.coefficients_in(1)
        L = parts.get(2, MPoly(_XI))
        alpha, beta = L.coefficient((1, 0, 0)), L.coefficient((0, 0, 1))
    Qf = parts.get(1, MPoly(_XI))
    Cf = parts.get(0, MPoly(_XI))
    assert 3 not in parts and alpha != 0
    # values along the tangent line L = 0, i.e. [x:z] = [-beta:alpha]
    on_tangent = (-beta, 0, alpha)
    if Qf(*on_tangent) == 0:
        return _flex_case(C, N, alpha, beta, Qf, Cf)
    return _nonflex_case(C, N, alpha, beta, L, Qf, Cf)


def _binary(p: MPoly, s_val=None):
    """Dehomogenise a form in (x, z) (y-free) at z = 1 as a PolyQ in x."""
    coeffs = {}
    for e, c in p.terms.items():
        coeffs[e[0]] = coeffs.get(e[0], 0) + c
    n = max(coeffs, default=-1)
    return PolyQ([coeffs.get(i, 0) for i in range(n + 1)])


def _nonflex_case(C, N, alpha, beta, L, Qf, Cf):
    Ninv = _mat_inv3(N)
    xi = _linear_images(Ninv, PLANE_VARS)          # new coords as forms in X, Y, Z
    Lb, Qb, Cb = _binary(L), _binary(Qf), _binary(Cf)
    delta = Qb * Qb - Lb * Cb * 4
    s0 = -Q(beta) / alpha
    w0 = Qb(s0)
    M = QuarticModel.from_poly(delta)
    E, quartic_map = quartic_to_weierstrass(M, (s0, w0))

    # forward: [X:Y:Z] -> (s, w)
    def at_xz(p: MPoly) -> MPoly:
        return p.subs([xi[0], MPoly(PLANE_VARS), xi[2]])

    zsq = xi[2] * xi[2]
    s_fwd = RatFunc(xi[0], xi[2])
    w_fwd = RatFunc(at_xz(L) * xi[1] * 2 + at_xz(Qf), zsq)

    # backward: (s, w) -> [X:Y:Z]
    sv, wv = MPoly.gens(("u", "v"))
    Ls = _poly_in(Lb, sv)
    Qs = _poly_in(Qb, sv)
    Cs = _poly_in(Cb, sv)
    new1 = [Ls * sv * 2, wv - Qs, Ls * 2]
    new2 = [(Qs + wv) * sv, Cs.scale(-2), Qs + wv]
    old1 = [sum((n.scale(N[r][c]) for c, n in enumerate(new1)), MPoly(("u", "v"))) for r in range(3)]
    old2 = [sum((n.scale(N[r][c]) for c, n in enumerate(new2)), MPoly(("u", "v"))) for r in range(3)]

    O = tuple(C.point)
    stage = MapStage(
        PLANE_VARS, ("u", "v"), PROJECTIVE, AFFINE,
        forward=charts((s_fwd, w_fwd)),
        backward=charts(old1, old2),
        special_forward=((O, (s0, -w0)),),
        special_backward=(((s0, -w0), O),),
        name="cubic->quartic (projection from marked point)",
    )
    return E, single(stage).then(quartic_map)


def _poly_in(p: PolyQ, var: MPoly) -> MPoly:
    acc = MPoly(var.vars)
    for c in reversed(p.coeffs):
        acc = acc * var + c
    return acc


def _flex_case(C, N, alpha, beta, Qf, Cf):
    # new coordinates (x2, y, z2) with z2 = alpha x + beta z, x2 = z
    # so x = (z2 - beta x2)/alpha, z = x2
    sub = [[-Fraction(beta) / alpha, 0, Fraction(1) / alpha], [0, 1, 0], [1, 0, 0]]
    N2 = [[sum(N[r][k] * sub[k][c] for k in range(3)) for c in range(3)] for r in range(3)]
    G = linear_subs(C.form, N2, _XI)
    parts = G.coefficients_in(1)
    # G = y^2 z + y z l(x, z) + c(x, z); dehomogenise at z = 1
    lead = parts[2].coefficient((0, 0, 1))
    assert lead != 0 and parts[2].degree() == 1 and parts[2].coefficient((1, 0, 0)) == 0
    lpoly = _binary(parts.get(1, MPoly(_XI))) * (1 / lead)
    cpoly = _binary(parts.get(0, MPoly(_XI))) * (1 / lead)
    kappa = cpoly[3]
    if kappa == 0:
        raise ValueError("cubic is reducible (tangent line is a component)")
    l1, l0 = lpoly[1], lpoly[0]
    e2, e1, e0 = cpoly[2], cpoly[1], cpoly[0]
    # x = -X/kappa, y = Y/kappa turns y^2 + (l1 x + l0) y + c(x) = 0 into long form
    a1, a3 = -l1, l0 * kappa
    a2, a4, a6 = -e2, e1 * kappa, -e0 * kappa * kappa
    A, B, sx = long_to_short(a1, a2, a3, a4, a6)
    E = WeierstrassCurve(A, B)

    N2inv = _mat_inv3(N2)
    xi = _linear_images(N2inv, PLANE_VARS)
    Xl = RatFunc(xi[0].scale(-kappa), xi[2])
    Yl = RatFunc(xi[1].scale(kappa), xi[2])
    Xs = Xl + sx
    Ys = Yl + (Xl * a1 + a3) * Fraction(1, 2)

    x, y = MPoly.gens(WEIERSTRASS_VARS)
    xl = x - sx
    yl = y - (xl.scale(a1) + a3).scale(Fraction(1, 2))
    new = [xl.scale(-1 / kappa), yl.scale(1 / kappa), MPoly.const(WEIERSTRASS_VARS, 1)]
    old = [sum((n.scale(N2[r][c]) for c, n in enumerate(new)), MPoly(WEIERSTRASS_VARS)) for r in range(3)]

    O = tuple(C.point)
    stage = MapStage(
        PLANE_VARS, WEIERSTRASS_VARS, PROJECTIVE, AFFINE,
        forward=charts((Xs, Ys)),
        backward=charts(old),
        special_forward=((O, None),),
        special_backward=((None, O),),
        name="cubic->weierstrass (flex)",
    )
    return E, single(stage)
