import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from addax.linalg import (QMat, Subspace, det, identity, inverse, matmul, nullspace, rank,
                          rref, solve, transpose, unit_vec)
from addax.scalar import ONE, ZERO, Scalar, random_scalar

from conftest import scalars


def square(n):
    return st.lists(st.lists(scalars, min_size=n, max_size=n), min_size=n, max_size=n)


@given(square(3))
def test_inverse_or_singular(m):
    if det(m):
        inv = inverse(m)
        assert QMat.from_rows(matmul(m, inv)).is_identity()
    else:
        with pytest.raises(ZeroDivisionError):
            inverse(m)


@given(square(3), square(3))
def test_det_multiplicative(a, b):
    assert det(matmul(a, b)) == det(a) * det(b)


@given(square(3))
def test_nullspace_is_kernel(m):
    ker = nullspace(m, 3)
    assert len(ker) + rank(m) == 3
    for v in ker:
        assert all(sum((x * y for x, y in zip(row, v)), ZERO) == ZERO for row in m)


def test_rref_pivots():
    rows = [[Scalar(0), Scalar(2), Scalar(4)], [Scalar(0), Scalar(1), Scalar(2)]]
    red, piv = rref(rows, 3)
    assert piv == [1] and red == [(ZERO, ONE, Scalar(2))]


def test_solve():
    a = [[Scalar(1), Scalar(1)], [Scalar(1), Scalar(-1)]]
    assert solve(a, (Scalar(2), Scalar(0))) == (ONE, ONE)
    assert solve([[Scalar(1), Scalar(1)], [Scalar(2), Scalar(2)]], (ONE, ZERO)) is None


def test_subspace_structural_equality():
    a = Subspace(3, [unit_vec(3, 0), unit_vec(3, 1)])
    b = Subspace(3, [(ONE, ONE, ZERO), (ONE, Scalar(-1), ZERO)])
    assert a == b and hash(a) == hash(b)
    c = Subspace(3, [unit_vec(3, 1), unit_vec(3, 2)])
    assert a.intersect(c) == Subspace(3, [unit_vec(3, 1)])
    assert (a + c).dim == 3
    assert a.contains((Scalar(3), Scalar(4), ZERO)) and not a.contains(unit_vec(3, 2))


def test_subspace_coordinates():
    s = Subspace(3, [(ONE, ONE, ZERO)])
    assert s.coordinates((Scalar(2), Scalar(2), ZERO)) == (Scalar(2),)


def test_qmat_ops():
    rng = random.Random(5)
    rows = [[random_scalar(rng) for _ in range(3)] for _ in range(3)]
    M = QMat.from_rows(rows)
    assert M.to_rows() == [tuple(r) for r in rows]
    assert (M @ QMat.identity(3)) == M
    assert (M - M).is_zero()
    assert M.transpose().to_rows() == transpose(rows)
    assert M.trace() == rows[0][0] + rows[1][1] + rows[2][2]
    assert (M ** 2) == M @ M
    assert M.scale(2) == M + M
    assert QMat.identity(2) ** 0 == QMat.identity(2)


def test_qmat_normalized_equality():
    a = QMat.from_rows([[Scalar(1, 1) / 2, Scalar(2) / 4]])
    b = QMat.from_rows([[Scalar(1, 1) / 2, Scalar(1) / 2]])
    assert a == b and hash(a) == hash(b)


def test_identity_rows():
    assert identity(2) == [(ONE, ZERO), (ZERO, ONE)]
