from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import Q, RatLike, is_square_int


@dataclass(frozen=True)
class QuadExt:
    """The element ``a + b*sqrt(d)`` of Q(sqrt(d)).

    ``d`` is any non-square integer; it does not have to be squarefree, so a
    field like Q(sqrt(N*E)) for a huge rational N/E can be used without
    factoring.  Mixing elements with different ``d`` is an error.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", Q(self.a))
        object.__setattr__(self, "b", Q(self.b))
        if not isinstance(self.d, int) or self.d == 0 or is_square_int(self.d):
            raise ValueError(f"d={self.d!r} must be a non-square integer")

    @classmethod
    def rational(cls, a: RatLike, d: int) -> "QuadExt":
        return cls(Q(a), Fraction(0), d)

    @classmethod
    def sqrt_of(cls, r: RatLike) -> "QuadExt":
        """sqrt(r) for a non-square rational r = N/E, as sqrt(N*E)/E."""
        r = Q(r)
        return cls(Fraction(0), Fraction(1, r.denominator), r.numerator * r.denominator)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt({self.d})) with Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return (self ** -k).inverse()
        result = QuadExt(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt({self.d})"


def proportional(u, v) -> bool:
    """True iff two coordinate vectors (over a common field) are proportional."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            minor = u[i] * v[j] - u[j] * v[i]
            if minor != 0:
                return False
    return True
