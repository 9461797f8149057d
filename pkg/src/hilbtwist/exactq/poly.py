"""Dense univariate polynomials over Q.

Coefficients are stored lowest degree first; the zero polynomial is the empty
tuple.  Degrees in this package stay small (at most 8 or so), so everything is
schoolbook.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

from .rational import Q


class PolyQ:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "PolyQ":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "PolyQ":
        p = cls((1,))
        for r in roots:
            p = p * cls((-Q(r), 1))
        return p

    # -- basic structure ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyQ((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_str

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _lift(other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        return PolyQ((other,))

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyQ(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = PolyQ((1,))
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / o.lc
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c == 0:
                continue
            quot[i - dq] = c
            for j, b in enumerate(o.coeffs):
                rem[i - dq + j] -= c * b
        return PolyQ(quot), PolyQ(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "PolyQ":
        return PolyQ(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        inv = 1 / self.lc
        return PolyQ(c * inv for c in self.coeffs)

    def compose(self, inner: "PolyQ") -> "PolyQ":
        acc = PolyQ()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a) -> "PolyQ":
        """The polynomial p(t + a)."""
        return self.compose(PolyQ((a, 1)))

    def reverse(self, n: int | None = None) -> "PolyQ":
        """t^n p(1/t) for n >= degree (default n = degree)."""
        n = self.degree if n is None else n
        return PolyQ(self[n - i] for i in range(n + 1))

    def primitive_int(self) -> list[int]:
        """Integer coefficient list, content 1, positive leading coefficient."""
        if self.is_zero():
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints)
        if ints[-1] < 0:
            g = -g
        return [c // g for c in ints]

    def is_squarefree(self) -> bool:
        return poly_gcd(self, self.derivative()).degree <= 0

    def squarefree_part(self) -> "PolyQ":
        if self.degree <= 0:
            return self
        return (self // poly_gcd(self, self.derivative())).monic()

    def discriminant(self) -> Fraction:
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * resultant(self, self.derivative()) / self.lc


def poly_gcd(f: PolyQ, g: PolyQ) -> PolyQ:
    """Monic gcd (the zero polynomial if both inputs are zero)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def resultant(f: PolyQ, g: PolyQ) -> Fraction:
    """Resultant Res(f, g) by the Euclidean remainder recursion over Q."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    result = Fraction(1)
    while True:
        m, n = f.degree, g.degree
        if n == 0:
            return result * g.lc ** m
        if m == 0:
            return result * f.lc ** n
        r = f % g
        if r.is_zero():
            return Fraction(0)
        # Res(f, g) = (-1)^(mn) lc(g)^(m - deg r) Res(g, r)
        if (m * n) % 2:
            result = -result
        result *= g.lc ** (m - r.degree)
        f, g = g, r


# -- rational roots ------------------------------------------------------

def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


_DIVISOR_LIMIT = 10 ** 10


def rational_roots(f: PolyQ) -> list[Fraction]:
    """Distinct rational roots of f, sorted ascending."""
    if f.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    return rational_roots_int(f.primitive_int())


def rational_roots_int(ints: Sequence[int]) -> list[Fraction]:
    """Distinct rational roots of the integer polynomial sum ints[i] x^i, sorted."""
    ints = list(ints)
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        raise ValueError("the zero polynomial has every number as a root")
    roots: set[Fraction] = set()
    # strip roots at zero
    k = 0
    while k < len(ints) and ints[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        ints = ints[k:]
    if len(ints) == 2:
        roots.add(Fraction(-ints[0], ints[1]))
    elif len(ints) == 3:
        c, b, a = ints
        disc = b * b - 4 * a * c
        if disc >= 0 and isqrt(disc) ** 2 == disc:
            r = isqrt(disc)
            roots.update((Fraction(-b + r, 2 * a), Fraction(-b - r, 2 * a)))
    elif len(ints) > 3:
        a0, an = ints[0], ints[-1]
        if max(abs(a0), abs(an)) <= _DIVISOR_LIMIT:
            roots.update(_roots_by_divisors(ints, a0, an))
        else:
            roots.update(_roots_by_isolation(PolyQ(ints).squarefree_part(), an))
    return sorted(roots)


def _homogeneous_value(ints: Sequence[int], p: int, q: int) -> int:
    # q^n f(p/q) in integer arithmetic (Horner)
    acc = 0
    qpow = 1
    for c in reversed(ints):
        acc = acc * p + c * qpow
        qpow *= q
    return acc


def _roots_by_divisors(ints: Sequence[int], a0: int, an: int) -> set[Fraction]:
    found = set()
    ps, qs = _divisors(a0), _divisors(an)
    # a root p/q gives f = (qx - p) g with g integral, so q - p | f(1), q + p | f(-1)
    f1 = sum(ints)
    fm1 = sum(c if i % 2 == 0 else -c for i, c in enumerate(ints))
    for q in qs:
        for p in ps:
            if gcd(p, q) != 1:
                continue
            for sp in (p, -p):
                if (q - sp != 0 and f1 % (q - sp)) or (q + sp != 0 and fm1 % (q + sp)):
                    continue
                if _homogeneous_value(ints, sp, q) == 0:
                    found.add(Fraction(sp, q))
    return found


def _sturm_chain(f: PolyQ) -> list[PolyQ]:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        if r.is_zero():
            break
        chain.append(r)
    return chain


def _sign_changes(chain: Sequence[PolyQ], x: Fraction) -> int:
    signs = [s for s in (p(x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _roots_by_isolation(f: PolyQ, an: int) -> set[Fraction]:
    """Exact rational roots via Sturm isolation, for coefficients too large to
    enumerate divisors.  A rational root p/q has q | an, so an isolating
    interval narrower than 1/an^2 contains at most one fraction of that
    denominator size; it is recovered with ``limit_denominator`` and checked.
    """
    found: set[Fraction] = set()
    if f.degree < 1:
        return found
    chain = _sturm_chain(f)
    bound = 1 + max(abs(c / f.lc) for c in f.coeffs[:-1]) if f.degree else 1
    target = Fraction(1, 2 * an * an)
    stack = [(-Fraction(bound), Fraction(bound))]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(chain, lo) - _sign_changes(chain, hi)
        if count == 0:
            continue
        if hi - lo < target and count == 1:
            mid = (lo + hi) / 2
            cand = mid.limit_denominator(abs(an))
            for c in (cand, hi):
                if lo < c <= hi and f(c) == 0:
                    found.add(c)
            continue
        mid = (lo + hi) / 2
        if f(mid) == 0:
            found.add(mid)
        stack.append((lo, mid))
        stack.append((mid, hi))
    return found


