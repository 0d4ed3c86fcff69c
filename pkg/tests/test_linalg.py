from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tropdual import linalg

square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=200, deadline=None)
@given(square)
def test_determinant_matches_sympy(mat):
    assert linalg.determinant(mat) == sympy.Matrix(mat).det()


@settings(max_examples=200, deadline=None)
@given(square)
def test_inverse_matches_sympy(mat):
    ref = sympy.Matrix(mat)
    if ref.det() == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(mat)
        return
    inv = linalg.inverse(mat)
    assert sympy.Matrix(inv) == ref.inv()
    assert linalg.matmul(mat, inv) == linalg.identity(len(mat))


@settings(max_examples=100, deadline=None)
@given(square)
def test_rank_and_nullspace(mat):
    n = len(mat)
    assert linalg.rank(mat) == sympy.Matrix(mat).rank()
    basis = linalg.nullspace(mat, n)
    assert len(basis) == n - linalg.rank(mat)
    for vec in basis:
        assert all(sum(a * b for a, b in zip(row, vec)) == 0 for row in mat)


def test_unimodular_inverse_is_integral():
    inv = linalg.inverse([[2, 1], [1, 1]])
    assert inv == [[1, -1], [-1, 2]]
    assert all(isinstance(v, int) for row in inv for v in row)


def test_transpose():
    assert linalg.transpose([[1, 2, 3], [4, 5, 6]]) == [[1, 4], [2, 5], [3, 6]]
