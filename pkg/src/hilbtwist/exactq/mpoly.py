"""Sparse multivariate polynomials and rational functions over Q.

These carry the explicit coordinate formulas of birational maps and the
quadric/cubic forms of the fibre pipeline.  A polynomial is a mapping from
exponent tuples to nonzero Fractions over a fixed tuple of variable names.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .rational import Q


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            c = Q(c)
            if c != 0:
                if len(exps) != len(self.vars):
                    raise ValueError("exponent tuple does not match variables")
                clean[tuple(exps)] = clean.get(tuple(exps), 0) + c
        self.terms: dict[tuple, Fraction] = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "MPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MPoly":
        i = list(variables).index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> tuple["MPoly", ...]:
        return tuple(cls.var(variables, v) for v in variables)

    @classmethod
    def linear(cls, variables: Sequence[str], coeffs: Sequence) -> "MPoly":
        terms = {}
        n = len(variables)
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(variables, terms)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps: tuple) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.const(self.vars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ------------------------------------------------------

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return MPoly.const(self.vars, other)

    def __add__(self, other):
        o = self._lift(other)
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "MPoly":
        c = Q(c)
        return MPoly(self.vars, {e: v * c for e, v in self.terms.items()})

    # -- evaluation and substitution -------------------------------------

    def __call__(self, *values):
        if len(values) != len(self.vars):
            raise ValueError(f"expected {len(self.vars)} values, got {len(values)}")
        # cache powers per variable
        pows = []
        for i, v in enumerate(values):
            dmax = self.degree_in(i)
            row = [1]
            for _ in range(max(dmax, 0)):
                row.append(row[-1] * v)
            pows.append(row)
        acc = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * pows[i][k]
            acc = acc + term
        return acc

    def subs(self, images: Sequence["MPoly"]) -> "MPoly":
        """Substitute polynomials (in a common target ring) for each variable."""
        if len(images) != len(self.vars):
            raise ValueError("need one image per variable")
        target = images[0].vars
        pow_cache: dict[tuple[int, int], MPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in pow_cache:
                pow_cache[key] = images[i] ** k
            return pow_cache[key]

        acc = MPoly(target)
        for e, c in self.terms.items():
            term = MPoly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    def diff(self, i: int) -> "MPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                terms[tuple(ne)] = c * e[i]
        return MPoly(self.vars, terms)

    def rename(self, variables: Sequence[str]) -> "MPoly":
        return MPoly(variables, self.terms)

    def coefficients_in(self, i: int) -> dict[int, "MPoly"]:
        """Split as sum_k c_k * var_i^k with c_k free of var_i."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            out.setdefault(k, {})[tuple(ne)] = c
        return {k: MPoly(self.vars, t) for k, t in out.items()}


class RatFunc:
    """A quotient num/den of MPolys over the same variables, kept unreduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.vars != den.vars:
            raise ValueError("numerator and denominator variables differ")
        # normalise constant denominators away
        if den.degree() == 0:
            num = num.scale(1 / den.coefficient((0,) * len(den.vars)))
            den = MPoly.const(num.vars, 1)
        self.num, self.den = num, den

    @property
    def vars(self):
        return self.num.vars

    @classmethod
    def of(cls, p) -> "RatFunc":
        return p if isinstance(p, RatFunc) else cls(p)

    def _lift(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        return RatFunc(MPoly.const(self.vars, other))

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __pow__(self, k: int):
        return RatFunc(self.num ** k, self.den ** k)

    def __call__(self, *values):
        """Value at a point, or None where the denominator vanishes."""
        d = self.den(*values)
        if d == 0:
            return None
        return self.num(*values) / d

    def subs(self, images: Sequence["RatFunc"]) -> "RatFunc":
        """Compose with rational functions; clears denominators per variable."""
        images = [RatFunc.of(r) for r in images]
        target = images[0].vars

        def compose(p: MPoly) -> tuple[MPoly, list[int]]:
            degs = [p.degree_in(i) for i in range(len(p.vars))]
            acc = MPoly(target)
            for e, c in p.terms.items():
                term = MPoly.const(target, c)
                for i, k in enumerate(e):
                    if k:
                        term = term * images[i].num ** k
                    if degs[i] - k:
                        term = term * images[i].den ** (degs[i] - k)
                acc = acc + term
            return acc, degs

        n, dn = compose(self.num)
        d, dd = compose(self.den)
        # num/den of the composite, matching per-variable denominator powers
        for i, img in enumerate(images):
            diff = dn[i] - dd[i]
            if diff > 0:
                d = d * img.den ** diff
            elif diff < 0:
                n = n * img.den ** (-diff)
        return RatFunc(n, d)

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__

    def is_zero(self) -> bool:
        return self.num.is_zero()


def homogeneous_forms(variables: Sequence[str], degree: int) -> list[tuple]:
    """All exponent tuples of the given total degree, lexicographically descending."""
    n = len(variables)
    out = [e for e in product(range(degree + 1), repeat=n) if sum(e) == degree]
    return sorted(out, reverse=True)


def linear_subs(p: MPoly, matrix: Sequence[Sequence], variables: Sequence[str] | None = None) -> MPoly:
    """p(M xi): substitute old_i = sum_j M[i][j] * new_j."""
    variables = tuple(variables or p.vars)
    gens = MPoly.gens(variables)
    images = []
    for row in matrix:
        acc = MPoly(variables)
        for c, g in zip(row, gens):
            if c != 0:
                acc = acc + g.scale(c)
        images.append(acc)
    return p.subs(images)


def iter_terms(p: MPoly) -> Iterable[tuple[tuple, Fraction]]:
    return sorted(p.terms.items(), reverse=True)
