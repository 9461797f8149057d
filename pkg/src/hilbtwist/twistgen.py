"""Rational points on twists of the Fermat quartic from the curve lambda d^2 = t^4 - 1.

For odd coprime n > m > 1 put lambda = n^4 - m^4.  Every rational point
(d, t) of C_lambda with d != 0 gives P = [t:m:n:1] on
F_d = V_{1, d^2, -d^2, -1}, and (t, d m^2, d n^2, 1, d m n) on the quotient
Y: x^4 + y^2 = z^2 + w^4, yz = t^2 in P(1,2,2,1,2).  C_lambda has the point
(1/m^2, n/m) of infinite order, so it has infinitely many such points.

C_lambda is handled through the quartic model v^2 = lambda u^4 - lambda,
v = lambda d, u = t, with the root (1, 0) sent to infinity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd
from typing import Sequence

from .dqsurf import DiagSurface, omega_filter
from .ellcurve import ECPoint, WeierstrassCurve
from .exactq import QuadExt, Q, is_square, proj_point, proj_str, proportional, rat_str, weighted_point
from .genus1 import MapPair, MapUndefinedError, QuarticModel, quartic_to_weierstrass


class TwistParamsError(ValueError):
    """(n, m) violates: both odd, coprime, n > m > 1."""


class TorsionBasePointError(RuntimeError):
    pass


@dataclass(frozen=True)
class TwistParams:
    n: int
    m: int

    def __post_init__(self):
        n, m = self.n, self.m
        if not isinstance(n, int) or not isinstance(m, int):
            raise TwistParamsError("n and m must be integers")
        if n % 2 == 0 or m % 2 == 0:
            raise TwistParamsError(f"n={n}, m={m}: both must be odd")
        if gcd(n, m) != 1:
            raise TwistParamsError(f"n={n}, m={m}: not coprime")
        if not n > m > 1:
            raise TwistParamsError(f"n={n}, m={m}: need n > m > 1")

    @property
    def lam(self) -> int:
        return self.n ** 4 - self.m ** 4

    @property
    def base_point(self) -> tuple[Fraction, Fraction]:
        """(d, t) = (1/m^2, n/m)."""
        return Fraction(1, self.m ** 2), Fraction(self.n, self.m)


@dataclass(frozen=True)
class TwistItem:
    k: int
    d: Fraction
    t: Fraction
    P: tuple[int, ...]
    omega: str | None = None
    square_flags: dict = field(default_factory=dict, compare=False)

    def to_json(self, Y: "YPoint | None" = None) -> dict:
        out = {
            "k": self.k,
            "d": rat_str(self.d),
            "t": rat_str(self.t),
            "P": proj_str(self.P),
            "omega": self.omega,
            "square_flags": {rat_str(a): flag for a, flag in self.square_flags.items()},
        }
        if Y is not None:
            out["Y"] = proj_str(Y.wp)
        return out


@dataclass(frozen=True)
class YPoint:
    wp: tuple[int, ...]

    def relations_hold(self) -> bool:
        x, y, z, w, t = self.wp
        return y * z == t * t and x ** 4 + y * y == z * z + w ** 4


@dataclass(frozen=True)
class XiResult:
    ok: bool
    note: str = ""


@dataclass(frozen=True)
class TwistEngine:
    params: TwistParams
    model: QuarticModel
    curve: WeierstrassCurve
    maps: MapPair
    base: ECPoint
    skipped: tuple = ()

    @property
    def lam(self) -> int:
        return self.params.lam

    def point_to_dt(self, W: ECPoint) -> tuple[Fraction, Fraction]:
        u, v = self.maps.backward(W)
        return v / self.lam, u

    def generate(self, count: int) -> tuple[list[TwistItem], list[int]]:
        """Items for k = 1..count plus the list of skipped k."""
        items, skipped = [], []
        acc: ECPoint = None
        for k in range(1, count + 1):
            acc = self.curve.add(acc, self.base)
            try:
                d, t = self.point_to_dt(acc)
            except MapUndefinedError:
                skipped.append(k)
                continue
            if d == 0:
                skipped.append(k)
                continue
            items.append(make_item(self.params, k, d, t))
        return items, skipped


def make_item(params: TwistParams, k: int, d, t) -> TwistItem:
    d, t = Q(d), Q(t)
    n, m, lam = params.n, params.m, params.lam
    if lam * d * d != t ** 4 - 1:
        raise AssertionError(f"k={k}: ({d}, {t}) is not on lambda d^2 = t^4 - 1")
    if t ** 4 + d * d * m ** 4 != d * d * n ** 4 + 1:
        raise AssertionError(f"k={k}: P_k is not on F_d")
    return TwistItem(k, d, t, proj_point((t, m, n, 1)))


def build(params: TwistParams) -> TwistEngine:
    lam = params.lam
    model = QuarticModel(lam, 0, 0, 0, -lam)
    curve, maps = quartic_to_weierstrass(model, (1, 0))
    d0, t0 = params.base_point
    base = maps.forward((t0, lam * d0))
    if not curve.on_curve(base):
        raise AssertionError("base point image is off the Weierstrass model")
    order = curve.torsion_order(base)
    if order != "infinite":
        raise TorsionBasePointError(f"base point has finite order {order}")
    return TwistEngine(params, model, curve, maps, base)


def twist_surface(d) -> DiagSurface:
    d = Q(d)
    return DiagSurface(1, d * d, -d * d, -1)


def certify(item: TwistItem, avoid: Sequence) -> TwistItem:
    """Fill the Omega verdict and the flags (d a_j is not a square) for each a_j."""
    verdict = omega_filter(twist_surface(item.d), item.P)
    flags = {}
    for a in avoid:
        a = Q(a)
        if a == 0:
            raise ValueError("avoid-list entries must be nonzero")
        flags[a] = not is_square(item.d * a)
    return replace(item, omega=verdict.verdict.value, square_flags=flags)


def quotient_point(item: TwistItem, params: TwistParams) -> YPoint:
    n, m = params.n, params.m
    d, t = item.d, item.t
    Y = YPoint(weighted_point((t, d * m * m, d * n * n, 1, d * m * n)))
    if not Y.relations_hold():
        raise AssertionError(f"k={item.k}: quotient relations fail at {proj_str(Y.wp)}")
    return Y


def xi_check(item: TwistItem, params: TwistParams) -> XiResult:
    """Xi(P_k) = [t : sqrt(d) m : sqrt(d) n : 1] is on the Fermat surface and
    its Galois conjugate is sigma(Xi(P_k)) = [t : -sqrt(d) m : -sqrt(d) n : 1]."""
    if is_square(item.d):
        return XiResult(True, "trivial twist: d is a square")
    r = QuadExt.sqrt_of(item.d)
    D = r.d
    xi = [QuadExt.rational(item.t, D), r * params.m, r * params.n, QuadExt.rational(1, D)]
    on_fermat = xi[0] ** 4 + xi[1] ** 4 == xi[2] ** 4 + xi[3] ** 4
    conj = [c.conj() for c in xi]
    sigma = [xi[0], -xi[1], -xi[2], xi[3]]
    return XiResult(on_fermat and proportional(conj, sigma))


def run(params: TwistParams, count: int, avoid: Sequence = ()) -> dict:
    """Full pipeline; returns records in k order plus a summary."""
    engine = build(params)
    items, skipped = engine.generate(count)
    records, failures = [], []
    for it in items:
        it = certify(it, avoid)
        Y = quotient_point(it, params)
        xi = xi_check(it, params)
        if not xi.ok:
            failures.append(f"k={it.k}: xi_check failed")
        records.append(it.to_json(Y))
    return {"items": records, "skipped": skipped, "failures": failures,
            "curve": {"A": rat_str(engine.curve.A), "B": rat_str(engine.curve.B)},
            "base": [rat_str(c) for c in engine.base]}


def to_json_lines(records: Sequence[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=False) + "\n" for r in records)
