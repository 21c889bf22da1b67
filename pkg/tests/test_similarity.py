import random

from hypothesis import given, settings
from hypothesis import strategies as st

from addax.linalg import QMat, det, inverse, matmul, transpose
from addax.scalar import ONE, ZERO, Scalar, parse_scalar
from addax.similarity import (cayley_orthogonal, char_poly, invariant_factors, is_similar,
                              p_divmod, p_str, similarity_transform)

from conftest import scalars


def test_invariant_factors_oracle(oracle):
    for key, data in oracle["matrices"].items():
        rows = [[parse_scalar(x) for x in r] for r in data["rows"]]
        want = [tuple(parse_scalar(c) for c in f) for f in data["invariant_factors"]]
        assert invariant_factors(rows) == want, key


def test_divisibility_chain_and_product():
    rng = random.Random(1)
    for _ in range(20):
        m = rng.randint(1, 4)
        A = [[Scalar(rng.randint(-2, 2)) for _ in range(m)] for _ in range(m)]
        fs = invariant_factors(A)
        for a, b in zip(fs, fs[1:]):
            assert not p_divmod(b, a)[1]
        assert len(char_poly(A)) == m + 1


def test_p_str():
    assert p_str((Scalar(-1) / 4, ZERO, ONE)) == "t^2 - 1/4"
    assert p_str((Scalar(0, 1), ONE)) == "t + (0+i)"


@settings(max_examples=25)
@given(st.lists(st.lists(scalars, min_size=3, max_size=3), min_size=3, max_size=3),
       st.integers(0, 10 ** 6))
def test_conjugates_are_similar_with_certificate(A, seed):
    rng = random.Random(seed)
    while True:
        P = [[Scalar(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(3)] for _ in range(3)]
        if det(P):
            break
    B = matmul(matmul(inverse(P), A), P)
    assert is_similar(A, B)
    X = similarity_transform(A, B)
    assert X is not None and det(X)
    assert QMat.from_rows(A) @ QMat.from_rows(X) == QMat.from_rows(X) @ QMat.from_rows(B)


def test_not_similar():
    J = [[ZERO, ONE], [ZERO, ZERO]]
    Z = [[ZERO, ZERO], [ZERO, ZERO]]
    assert not is_similar(J, Z)
    assert similarity_transform(J, Z) is None


def test_cayley_orthogonal():
    rng = random.Random(3)
    for m in (1, 2, 3, 4):
        Q = cayley_orthogonal(m, rng)
        assert QMat.from_rows(matmul(transpose(Q), Q)).is_identity()
