"""Diagonal quartic surfaces a x^4 + b y^4 + c z^4 + d w^4 = 0 and their square-map quadric."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from math import isqrt

from ..exactq import Q, is_square, proj_point, rat_str

COORDS = ("x", "y", "z", "w")
# the three ways of splitting four coordinates into two pairs
PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


@dataclass(frozen=True)
class DiagSurface:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = Q(getattr(self, name))
            if v == 0:
                raise ValueError("diagonal surface coefficients must be nonzero")
            object.__setattr__(self, name, v)

    @classmethod
    def of(cls, coeffs) -> "DiagSurface":
        a, b, c, d = coeffs
        return cls(a, b, c, d)

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @property
    def square_disc(self) -> bool:
        return is_square(self.a * self.b * self.c * self.d)

    def quartic(self, P) -> Fraction:
        return sum((k * Q(x) ** 4 for k, x in zip(self.coeffs, P)), Fraction(0))

    def quadric(self, X) -> Fraction:
        """a X^2 + b Y^2 + c Z^2 + d W^2, the image quadric of the square map."""
        return sum((k * Q(x) ** 2 for k, x in zip(self.coeffs, X)), Fraction(0))

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    def __str__(self):
        return "V_{" + ",".join(rat_str(c) for c in self.coeffs) + "}"


FERMAT = DiagSurface(1, 1, -1, -1)


def contains(S: DiagSurface, P) -> bool:
    return S.quartic(P) == 0


class OmegaVerdict(str, Enum):
    CERTIFIED_OFF = "CertifiedOff"
    ON_COORDINATE_HYPERPLANE = "OnCoordinateHyperplane"
    POSSIBLY_ON_LINE = "PossiblyOnLine"


@dataclass(frozen=True)
class OmegaResult:
    verdict: OmegaVerdict
    pairing: tuple | None = None  # ((i, j), (k, l)) coordinate indices
    signs: tuple | None = None    # (+1|-1, +1|-1): c_i u_i^4 = -s c_j u_j^4

    def __str__(self):
        return self.verdict.value

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.pairing is not None:
            out["pairing"] = [[COORDS[i] for i in pair] for pair in self.pairing]
            out["signs"] = ["+" if s > 0 else "-" for s in self.signs]
        return out


def omega_filter(S: DiagSurface, P) -> OmegaResult:
    """Sound off-certificate for the locus xyzw = 0 plus the 48 lines.

    A line of the surface pairs the coordinates as {i, j}, {k, l} with
    c_i u_i^4 = -zeta c_j u_j^4 type relations; on a rational point the root of
    unity raised to the 4th power is +-1, so some pairing must satisfy
    c_i u_i^4 = s c_j u_j^4 with s = +-1 on both pairs.  Signs are reported
    as s with c_i u_i^4 + s c_j u_j^4 = 0, so the Fermat point [1:1:1:1] on
    x = z, y = w reads (+, +).
    """
    P = proj_point(P)
    if not contains(S, P):
        raise ValueError(f"{P} is not on {S}")
    if any(c == 0 for c in P):
        return OmegaResult(OmegaVerdict.ON_COORDINATE_HYPERPLANE)
    terms = [k * Fraction(x) ** 4 for k, x in zip(S.coeffs, P)]
    hits = []
    for pairing in PAIRINGS:
        signs = []
        for i, j in pairing:
            ok = [s for s in (1, -1) if terms[i] + s * terms[j] == 0]
            signs.append(ok)
        for s1, s2 in product(*signs):
            hits.append((-(s1 + s2), pairing, (s1, s2)))
    if not hits:
        return OmegaResult(OmegaVerdict.CERTIFIED_OFF)
    hits.sort(key=lambda h: h[0])  # prefer (+, +)
    _, pairing, signs = hits[0]
    return OmegaResult(OmegaVerdict.POSSIBLY_ON_LINE, pairing, signs)


def square_map(P) -> tuple[int, ...]:
    return proj_point(Fraction(c) ** 2 for c in proj_point(P))


def _quadric_shell(S: DiagSurface, h: int):
    """Canonical points of height exactly h on the quadric, unsorted."""
    a, b, c, d = S.coeffs
    found = set()
    rng = range(-h, h + 1)
    for X, Y, Z in product(rng, repeat=3):
        rest = -(a * X * X + b * Y * Y + c * Z * Z) / d
        if rest < 0 or not _is_sq(rest):
            continue
        W = Fraction(isqrt(rest.numerator), isqrt(rest.denominator))
        for Wv in {W, -W}:
            if (X, Y, Z, Wv) == (0, 0, 0, 0):
                continue
            P = proj_point((X, Y, Z, Wv))
            if max(abs(v) for v in P) == h:
                found.add(P)
    return found


def _is_sq(r: Fraction) -> bool:
    n, m = r.numerator, r.denominator
    return isqrt(n) ** 2 == n and isqrt(m) ** 2 == m


def _search_key(P):
    return (sum(1 for c in P if c != 0), tuple(-c for c in P))


def quadric_point_search(S: DiagSurface, H: int):
    """First canonical point of height <= H on a X^2 + b Y^2 + c Z^2 + d W^2 = 0.

    Order: by height, then by number of nonzero coordinates, then descending
    lexicographic.  Returns None when nothing is found (including H < 1).
    """
    for h in range(1, H + 1):
        shell = _quadric_shell(S, h)
        if shell:
            return min(shell, key=_search_key)
    return None
