"""Elliptic curves y^2 = x^3 + A x + B over Q with exact chord-tangent arithmetic.

Points are ``None`` for the point at infinity or a pair ``(x, y)`` of
Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .exactq import PolyQ, Q, rational_roots

ECPoint = Optional[Tuple[Fraction, Fraction]]
INFINITY: ECPoint = None

# Mazur: a rational torsion point has order in {1..10, 12}.
MAZUR_BOUND = 12


@dataclass(frozen=True)
class WeierstrassCurve:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Q(self.A))
        object.__setattr__(self, "B", Q(self.B))
        if self.discriminant == 0:
            raise ValueError(f"singular curve: {self}")

    @property
    def discriminant(self) -> Fraction:
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)

    @property
    def j_invariant(self) -> Fraction:
        a3 = 4 * self.A ** 3
        return 1728 * a3 / (a3 + 27 * self.B ** 2)

    def __str__(self):
        return f"y^2 = x^3 + ({self.A})*x + ({self.B})"

    def rhs(self, x):
        return x * x * x + self.A * x + self.B

    def on_curve(self, P: ECPoint) -> bool:
        if P is None:
            return True
        x, y = P
        return y * y == self.rhs(x)

    def point(self, x, y) -> ECPoint:
        P = (Q(x), Q(y))
        if not self.on_curve(P):
            raise ValueError(f"{P} is not on {self}")
        return P

    def neg(self, P: ECPoint) -> ECPoint:
        if P is None:
            return None
        return (P[0], -P[1])

    def add(self, P: ECPoint, R: ECPoint) -> ECPoint:
        if P is None:
            return R
        if R is None:
            return P
        x1, y1 = P
        x2, y2 = R
        if x1 == x2:
            if y1 != y2 or y1 == 0:
                return None
            lam = (3 * x1 * x1 + self.A) / (2 * y1)
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - x1 - x2
        y3 = lam * (x1 - x3) - y1
        return (x3, y3)

    def double(self, P: ECPoint) -> ECPoint:
        return self.add(P, P)

    def scalar_mul(self, k: int, P: ECPoint) -> ECPoint:
        if k < 0:
            return self.neg(self.scalar_mul(-k, P))
        result: ECPoint = None
        addend = P
        while k:
            if k & 1:
                result = self.add(result, addend)
            k >>= 1
            if k:
                addend = self.double(addend)
        return result

    def multiples(self, P: ECPoint, kmax: int) -> list[ECPoint]:
        """[[1]P, [2]P, ..., [kmax]P] by repeated addition."""
        out = []
        acc: ECPoint = None
        for _ in range(kmax):
            acc = self.add(acc, P)
            out.append(acc)
        return out

    def torsion_order(self, P: ECPoint) -> Union[int, str]:
        """Exact order of P, or ``"infinite"``.

        Over Q any torsion order is at most 12, so scanning k <= 12 decides.
        """
        acc: ECPoint = None
        for k in range(1, MAZUR_BOUND + 1):
            acc = self.add(acc, P)
            if acc is None:
                return k
        return "infinite"

    def two_torsion(self) -> list[ECPoint]:
        cubic = PolyQ((self.B, self.A, 0, 1))
        return [(r, Fraction(0)) for r in rational_roots(cubic)]

    def lutz_nagell_excludes(self, P: ECPoint) -> bool:
        """True when integrality alone shows P has infinite order.

        Only valid on an integral model; used as a quick pre-check, never in
        place of :meth:`torsion_order`.
        """
        if P is None or self.A.denominator != 1 or self.B.denominator != 1:
            return False
        x, y = P
        if x.denominator != 1 or y.denominator != 1:
            return True
        if y == 0:
            return False
        return (self.discriminant / 16) % (y * y) != 0


def on_curve(C: WeierstrassCurve, P: ECPoint) -> bool:
    return C.on_curve(P)


def add(C: WeierstrassCurve, P: ECPoint, R: ECPoint) -> ECPoint:
    return C.add(P, R)


def scalar_mul(C: WeierstrassCurve, k: int, P: ECPoint) -> ECPoint:
    return C.scalar_mul(k, P)


def torsion_order(C: WeierstrassCurve, P: ECPoint):
    return C.torsion_order(P)


def two_torsion(C: WeierstrassCurve) -> list[ECPoint]:
    return C.two_torsion()
