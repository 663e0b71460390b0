"""Small exact-rational dense linear algebra.

Everything here works over Fraction and is written for the tiny sizes
this library meets (rank <= 6): plain Gaussian elimination, and
symmetric congruence reduction for inertia.  No pivoting strategy
beyond "find a usable entry" is needed when arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


class SingularMatrixError(ValueError):
    """Square system without a unique solution."""


def solve(matrix: Matrix, rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve matrix @ x = rhs exactly for square nonsingular matrix."""
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("shape mismatch")
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col]), None)
        if pivot_row is None:
            raise SingularMatrixError("singular matrix")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        pivot = a[col][col]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col] / pivot
                for c in range(col, n + 1):
                    a[r][c] -= f * a[col][c]
    return [a[i][n] / a[i][i] for i in range(n)]


def inertia(sym: Matrix) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Symmetric congruence reduction: diagonalize with simultaneous
    row/column operations; Sylvester's law of inertia makes the
    diagonal signs invariant.
    """
    n = len(sym)
    m = [[Fraction(v) for v in row] for row in sym]
    for i in range(n):
        if any(m[i][j] != m[j][i] for j in range(i)):
            raise ValueError("matrix not symmetric")
    plus = minus = zero = 0
    for i in range(n):
        if not m[i][i]:
            # Find a nonzero diagonal entry to swap in, else create one
            # from an off-diagonal entry (row/col j added to row/col i
            # turns m[i][i] into 2*m[i][j]).
            j = next((k for k in range(i + 1, n) if m[k][k]), None)
            if j is not None:
                _swap_sym(m, i, j)
            else:
                j = next((k for k in range(i + 1, n) if m[i][k]), None)
                if j is None:
                    zero += 1
                    continue
                for c in range(n):
                    m[i][c] += m[j][c]
                for r in range(n):
                    m[r][i] += m[r][j]
        pivot = m[i][i]
        if pivot > 0:
            plus += 1
        else:
            minus += 1
        for r in range(i + 1, n):
            if m[r][i]:
                f = m[r][i] / pivot
                for c in range(i, n):
                    m[r][c] -= f * m[i][c]
                for c in range(i, n):
                    m[c][r] = m[r][c]
    return plus, minus, zero


def _swap_sym(m: list[list[Fraction]], i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]
    for row in m:
        row[i], row[j] = row[j], row[i]


def is_negative_definite_matrix(sym: Matrix) -> bool:
    n = len(sym)
    p, m, z = inertia(sym)
    return (p, m, z) == (0, n, 0)
