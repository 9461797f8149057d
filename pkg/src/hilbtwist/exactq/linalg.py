"""Small exact linear algebra over Q, delegated to sympy matrices.

Inputs and outputs are nested lists of Fractions; sympy only does the
elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sympy

Matrix = list  # list[list[Fraction]]


def _to_sympy(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in r]
                         for r in rows])


def _from_sympy_scalar(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _from_sympy(M: sympy.Matrix) -> Matrix:
    return [[_from_sympy_scalar(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return _to_sympy(rows).rank()


def rref(rows: Sequence[Sequence]) -> Matrix:
    """Nonzero rows of the reduced row echelon form."""
    R, pivots = _to_sympy(rows).rref()
    return _from_sympy(R)[: len(pivots)]


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {v : rows . v = 0}, one vector per list entry, in sympy's order."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return [[_from_sympy_scalar(c) for c in v] for v in _to_sympy(rows).nullspace()]


def det(rows: Sequence[Sequence]) -> Fraction:
    return _from_sympy_scalar(_to_sympy(rows).det())


def solve_combination(target: Sequence, basis: Sequence[Sequence]) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i = target, or None if target is outside the span."""
    A = _to_sympy(basis).T
    b = _to_sympy([target]).T
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    sol = sol.subs({p: 0 for p in params})
    return [_from_sympy_scalar(c) for c in sol]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))
