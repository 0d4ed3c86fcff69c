"""Exact linear algebra over the integers and rationals.

Matrices are lists of rows.  Everything uses Python ints and
:class:`fractions.Fraction`, so no result is ever rounded or wrapped.
"""

from __future__ import annotations

from fractions import Fraction


def determinant(matrix: list) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(matrix: list) -> list:
    """Exact inverse via Gauss-Jordan; entries are ints when integral."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("inverse needs a square matrix")
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    out = [row[n:] for row in a]
    return [[int(v) if v.denominator == 1 else v for v in row] for row in out]


def transpose(matrix: list) -> list:
    return [list(col) for col in zip(*matrix)]


def matmul(a: list, b: list) -> list:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int) -> list:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def row_echelon(rows: list) -> list:
    """Reduced echelon basis (list of Fraction rows) of the row span."""
    basis = []
    pivots = []
    for row in rows:
        v = [Fraction(x) for x in row]
        for b, p in zip(basis, pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, b)]
        lead = next((i for i, x in enumerate(v) if x != 0), None)
        if lead is None:
            continue
        v = [x / v[lead] for x in v]
        for i, b in enumerate(basis):
            if b[lead] != 0:
                f = b[lead]
                basis[i] = [x - f * y for x, y in zip(b, v)]
        basis.append(v)
        pivots.append(lead)
    return basis


def rank(rows: list) -> int:
    return len(row_echelon(rows))


def nullspace(matrix: list, ncols: int) -> list:
    """Basis of ``{v : matrix @ v = 0}`` as Fraction vectors of length ncols."""
    basis = row_echelon(matrix)
    pivots = [next(i for i, x in enumerate(b) if x != 0) for b in basis]
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for b, p in zip(basis, pivots):
            v[p] = -b[f]
        out.append(v)
    return out
