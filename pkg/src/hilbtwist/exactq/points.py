"""Canonical integer representatives of projective and weighted-projective points."""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

from .rational import Q

ProjPoint = tuple  # tuple[int, ...], canonical


def proj_point(coords: Iterable) -> tuple[int, ...]:
    """Canonical form: primitive integers, first nonzero coordinate positive.

    Accepts ints, Fractions or numeric strings; two inputs that differ by a
    nonzero rational scalar give the same tuple.
    """
    qs = [Q(c) for c in coords]
    if all(c == 0 for c in qs):
        raise ValueError("the zero vector is not a projective point")
    den = lcm(*(c.denominator for c in qs))
    ints = [int(c * den) for c in qs]
    g = reduce(gcd, ints)
    first = next(c for c in ints if c != 0)
    if first < 0:
        g = -g
    return tuple(c // g for c in ints)


def height(P: Sequence) -> int:
    """Naive height max |coord| of the canonical representative."""
    return max(abs(c) for c in proj_point(P))


def proj_str(P: Sequence) -> str:
    return "[" + ":".join(str(c) for c in P) + "]"


_BRACKET = re.compile(r"^\s*\[(.*)\]\s*$")


def parse_proj(text: str, dim: int | None = None) -> tuple[int, ...]:
    """Parse ``"[a:b:...]"`` (rational entries allowed) into canonical form."""
    m = _BRACKET.match(text)
    body = m.group(1) if m else text
    parts = [p for p in re.split(r"[:,]", body)]
    if any(not p.strip() for p in parts):
        raise ValueError(f"malformed projective point {text!r}")
    P = proj_point(Fraction(p.strip()) for p in parts)
    if dim is not None and len(P) != dim + 1:
        raise ValueError(f"expected a point of P^{dim}, got {text!r}")
    return P


def affine_to_p1(x: Fraction | None) -> tuple[int, int]:
    """x -> [x:1]; None (infinity) -> [1:0]."""
    if x is None:
        return (1, 0)
    x = Q(x)
    return proj_point((x.numerator, x.denominator))


def p1_to_affine(P: Sequence[int]) -> Fraction | None:
    """[s:u] -> s/u, or None at u = 0."""
    s, u = P
    if u == 0:
        return None
    return Fraction(s, u)


def enumerate_p1_by_height(H: int) -> list[tuple[int, int]]:
    """All points [p:q] of P^1(Q) with max(|p|,|q|) <= H.

    Returned in lexicographic order on (q, p) of the canonical pair.
    """
    if H < 1:
        raise ValueError("height bound must be >= 1")
    pts = [(1, 0), (0, 1)]
    for p in range(1, H + 1):
        for q in range(-H, H + 1):
            if q != 0 and gcd(p, abs(q)) == 1:
                pts.append((p, q))
    return sorted(pts, key=lambda P: (P[1], P[0]))


def count_p1_by_height(H: int) -> int:
    return len(enumerate_p1_by_height(H))


def projective_points_of_height(n: int, h: int) -> Iterable[tuple[int, ...]]:
    """Canonical points of P^n with height exactly h (unordered generator)."""
    rng = range(-h, h + 1)

    def rec(prefix, started, hit):
        i = len(prefix)
        if i == n + 1:
            if started and hit:
                P = tuple(prefix)
                if reduce(gcd, P) == 1:
                    yield P
            return
        for c in rng:
            if not started and c < 0:
                continue
            yield from rec(prefix + [c], started or c != 0, hit or abs(c) == h)

    yield from rec([], False, False)


# -- weighted projective space ----------------------------------------------

def _ceil_sqrt_divisor(F: int) -> int:
    """Smallest e > 0 with F | e^2, i.e. prod p^ceil(v_p(F)/2)."""
    F = abs(F)
    e = 1
    p = 2
    while p * p <= F and p < 10 ** 5:
        if F % p == 0:
            k = 0
            while F % p == 0:
                F //= p
                k += 1
            e *= p ** ((k + 1) // 2)
        p += 1 if p == 2 else 2
    if F > 1:
        r = isqrt(F)
        if r * r == F:
            e *= r
        elif p * p > F:
            e *= F  # F is prime
        else:
            # large cofactor with no small factors; fall back to full factoring
            from sympy import factorint

            for prime, k in factorint(F).items():
                e *= prime ** ((k + 1) // 2)
    return e


def weighted_point(coords: Iterable, weights: Sequence[int] = (1, 2, 2, 1, 2)) -> tuple[int, ...]:
    """Canonical representative in the weighted projective space P(weights).

    Weights must be 1 or 2.  Scaling acts by c_i -> mu^{w_i} c_i.  The result is
    integral and weighted-primitive (no prime p with p^{w_i} | c_i for all i),
    with the first nonzero weight-1 coordinate positive.  When every weight-1
    coordinate vanishes the remaining coordinates scale by arbitrary rationals
    (mu^2 with mu possibly in a quadratic field gives the same geometric point),
    so they are normalised as an ordinary projective point.
    """
    qs = [Q(c) for c in coords]
    weights = tuple(weights)
    if len(qs) != len(weights) or any(w not in (1, 2) for w in weights):
        raise ValueError("weights must be 1 or 2, one per coordinate")
    if all(c == 0 for c in qs):
        raise ValueError("the zero vector is not a weighted projective point")
    odd = [i for i, w in enumerate(weights) if w == 1]
    even = [i for i, w in enumerate(weights) if w == 2]
    if all(qs[i] == 0 for i in odd):
        sub = proj_point([qs[i] for i in even])
        out = [0] * len(qs)
        for i, c in zip(even, sub):
            out[i] = c
        return tuple(out)
    # make the weight-1 coordinates a primitive integer vector
    mu = Fraction(lcm(*(qs[i].denominator for i in odd)),
                  reduce(gcd, (qs[i].numerator for i in odd)))
    scaled = [c * mu ** w for c, w in zip(qs, weights)]
    # then the least integer e making the weight-2 coordinates integral
    F = lcm(*(scaled[i].denominator for i in even)) if even else 1
    e = _ceil_sqrt_divisor(F)
    scaled = [c * e ** w for c, w in zip(scaled, weights)]
    ints = [int(c) for c in scaled]
    assert all(Fraction(c) == s for c, s in zip(ints, scaled))
    first_odd = next(ints[i] for i in odd if ints[i] != 0)
    if first_odd < 0:
        ints = [-c if w == 1 else c for c, w in zip(ints, weights)]
    return tuple(ints)

