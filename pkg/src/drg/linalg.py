"""Dense exact linear algebra over the rationals (small systems only)."""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def solve(a: Matrix, rhs: list[Fraction]) -> list[Fraction]:
    """Solve A x = b by Gauss-Jordan elimination, exactly."""
    n = len(a)
    m = [list(row) + [rhs[i]] for i, row in enumerate(a)]
    _reduce(m, n)
    return [m[i][n] for i in range(n)]


def invert(a: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan on [A | I]."""
    n = len(a)
    m = [
        list(row) + [Fraction(1 if i == jj else 0) for jj in range(n)]
        for i, row in enumerate(a)
    ]
    _reduce(m, n)
    return [row[n:] for row in m]


def _reduce(m: Matrix, n: int) -> None:
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
