"""Rational scalars, square classes and their string form.

Rationals are plain :class:`fractions.Fraction` values; this module adds the
few number-theoretic helpers the geometry needs on top of them.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Rat = Fraction
RatLike = Union[int, Fraction, str]


def Q(value: RatLike) -> Fraction:
    """Coerce ``value`` (int, Fraction or ``"num/den"`` string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal notation not accepted for exact input: {text!r}")
    return Fraction(text)


def rat_str(q: Fraction | int) -> str:
    """Serialize as ``"num/den"``, dropping the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def is_square(q: RatLike) -> bool:
    """True iff ``q`` is the square of a rational (zero included).

    Uses num*den instead of testing numerator and denominator separately;
    both are equivalent for a reduced fraction and no factoring is involved.
    """
    q = Q(q)
    if q < 0:
        return False
    return is_square_int(q.numerator * q.denominator)


def rat_sqrt(q: RatLike) -> Fraction | None:
    """The nonnegative rational square root of ``q``, or None if irrational."""
    q = Q(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def square_class_equal(p: RatLike, q: RatLike) -> bool:
    """True iff p and q have the same image in Q*/(Q*)^2."""
    p, q = Q(p), Q(q)
    if p == 0 or q == 0:
        raise ValueError("square classes are defined for nonzero rationals only")
    return is_square(p * q)
