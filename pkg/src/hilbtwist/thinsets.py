"""Thin subsets of P^1(Q): images of rational maps phi: P^1 -> P^1 of degree > 1.

The rational points of P^1 of height <= H hit by a fixed cover form a
vanishing proportion as H grows, which is the desk-scale picture of P^1
having the Hilbert property.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from .exactq import PolyQ, enumerate_p1_by_height, poly_gcd, proj_point, proj_str, rat_str
from .exactq.poly import rational_roots_int

INFINITY = (1, 0)


@dataclass(frozen=True)
class RationalCover:
    num: PolyQ
    den: PolyQ
    label: str = ""

    def __post_init__(self):
        if self.num.is_zero() or self.den.is_zero():
            raise ValueError("numerator and denominator must be nonzero")
        if poly_gcd(self.num, self.den).degree > 0:
            raise ValueError("numerator and denominator share a factor")
        if max(self.num.degree, self.den.degree) < 2:
            raise ValueError("a cover must have degree > 1")
        # common integer scaling of num and den, used for fast preimage solving
        den = lcm(*(c.denominator for c in self.num.coeffs + self.den.coeffs))
        object.__setattr__(self, "_int_num", [int(c * den) for c in self.num.coeffs])
        object.__setattr__(self, "_int_den", [int(c * den) for c in self.den.coeffs])
        object.__setattr__(self, "_at_infinity", self(INFINITY))

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.den.degree == 0 and self.den[0] == 1:
            return self.num.to_str("u")
        return f"({self.num.to_str('u')})/({self.den.to_str('u')})"

    def __call__(self, P) -> tuple[int, int]:
        """phi on P^1, in homogeneous form so the point at infinity is covered."""
        a, b = proj_point(P)
        deg = self.degree
        # homogenise num, den to degree deg in (a, b)
        hn = sum((c * a ** i * b ** (deg - i) for i, c in enumerate(self.num.coeffs)), Fraction(0))
        hd = sum((c * a ** i * b ** (deg - i) for i, c in enumerate(self.den.coeffs)), Fraction(0))
        return proj_point((hn, hd))

    def preimages(self, t) -> list[tuple[int, int]]:
        return preimages(self, t)


def preimages(phi: RationalCover, t) -> list[tuple[int, int]]:
    """All rational u with phi(u) = t, affine roots in increasing order then infinity."""
    s, u = proj_point(t)
    return _preimages(phi, s, u)


def _preimages(phi: RationalCover, s: int, u: int) -> list[tuple[int, int]]:
    N, D = phi._int_num, phi._int_den
    eq = [u * (N[i] if i < len(N) else 0) - s * (D[i] if i < len(D) else 0)
          for i in range(max(len(N), len(D)))]
    out = [(r.numerator, r.denominator) for r in rational_roots_int(eq)]
    if phi._at_infinity == (s, u):
        out.append(INFINITY)
    return out


@dataclass(frozen=True)
class ThinReport:
    height_bound: int
    total: int
    covered: int
    per_cover: tuple[int, ...]
    covers: tuple[str, ...]
    witnesses: tuple[tuple[tuple[int, int], int, tuple[int, int]], ...]

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.covered, self.total) if self.total else Fraction(0)

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["height_bound", "total", "covered", "fraction"])
        w.writerow([self.height_bound, self.total, self.covered, rat_str(self.fraction)])
        return buf.getvalue()

    def witnesses_json(self) -> str:
        doc = {
            "height_bound": self.height_bound,
            "covers": list(self.covers),
            "per_cover": list(self.per_cover),
            "witnesses": [{"t": proj_str(t), "cover": self.covers[i], "u": proj_str(w)}
                          for t, i, w in self.witnesses],
        }
        return json.dumps(doc, indent=1) + "\n"


def thin_report(covers: Sequence[RationalCover], H: int) -> ThinReport:
    if H < 1:
        raise ValueError("height bound must be >= 1")
    pts = enumerate_p1_by_height(H)
    per = [0] * len(covers)
    witnesses = []
    for t in pts:
        first = None
        for i, phi in enumerate(covers):
            pre = _preimages(phi, *t)
            if pre:
                per[i] += 1
                if first is None:
                    first = (t, i, pre[0])
        if first is not None:
            witnesses.append(first)
    return ThinReport(H, len(pts), len(witnesses), tuple(per),
                      tuple(phi.name for phi in covers), tuple(witnesses))


_U = sympy.Symbol("u")
_TRANSFORMS = standard_transformations + (convert_xor, implicit_multiplication)


def _to_polyq(expr) -> PolyQ:
    poly = sympy.Poly(expr, _U)
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        c = sympy.Rational(c)
        coeffs.append(Fraction(int(c.p), int(c.q)))
    return PolyQ(tuple(coeffs))


def parse_cover(text: str) -> RationalCover:
    """Parse a rational function of u such as ``u^2``, ``u^3-u`` or ``(u^2+1)/(u-1)``."""
    text = text.strip()
    if not text:
        raise ValueError("empty cover expression")
    try:
        expr = parse_expr(text, local_dict={"u": _U}, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise ValueError(f"cannot parse cover {text!r}: {exc}") from None
    if expr.free_symbols - {_U}:
        raise ValueError(f"cover {text!r} may only use the variable u")
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    try:
        return RationalCover(_to_polyq(num), _to_polyq(den), label=text)
    except sympy.PolynomialError as exc:
        raise ValueError(f"cover {text!r} is not a rational function of u: {exc}") from None


def parse_covers(text: str) -> list[RationalCover]:
    """Comma-separated list of covers; an empty list is an error."""
    parts = [p for p in (s.strip() for s in text.split(",")) if p]
    if not parts:
        raise ValueError("no covers given")
    return [parse_cover(p) for p in parts]
