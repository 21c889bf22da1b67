import random

import pytest

from addax.algebra import LocalAlgebra, PointedPair, change_basis
from addax.catalog import (block_diag, corank_one, corank_one_n2, quadric_nondegenerate,
                           standard_pairs, truncated)
from addax.classify import (EQUIVALENT, GENERIC, INCONCLUSIVE, N2_CHAIN, N2_SPLIT,
                            NOT_EQUIVALENT, BilinearTriple, ChangeOfBasis, LambdaData,
                            TripleError, canonical_quadric_form, canonicalize_nondegenerate,
                            classify_corank_one, extract_lambda, gram_matrix, j_invariant_n4,
                            lambda_equivalent)
from addax.classify import _kernel_vector
from addax.linalg import det, unit_vec
from addax.multilinear import SymForm, build_FW, evaluate_form
from addax.scalar import I, ONE, ZERO, NotRepresentable, Scalar, parse_scalar, random_scalar

from helpers import conjugate_triple

S = Scalar
half = S(1) / 2


def canonical_triple(n):
    return BilinearTriple(quadric_nondegenerate(n), canonical_quadric_form(n))


def test_gram_examples():
    conic = BilinearTriple.from_pair(truncated(3))
    assert gram_matrix(conic) == [(0, 0, -1), (0, 1, 0), (-1, 0, 0)]
    assert gram_matrix(canonical_triple(1)) == [(0, 0, 1), (0, -1, 0), (1, 0, 0)]
    zero = BilinearTriple(truncated(3), SymForm(3, 2))
    assert gram_matrix(zero) == [(0, 0, 0)] * 3 and zero.rank == 0


def test_triple_validation():
    with pytest.raises(TripleError):
        BilinearTriple(truncated(3), SymForm(3, 2, {(0, 0): 1}))
    with pytest.raises(TripleError):
        BilinearTriple(truncated(3), SymForm(3, 2, {(1, 1): 1}))
    with pytest.raises(TripleError):
        BilinearTriple(truncated(3), SymForm(3, 3))


def test_canonicalize_idempotent():
    for n in range(1, 5):
        T = canonical_triple(n)
        out, change = canonicalize_nondegenerate(T)
        assert change.is_identity() and change.form_scale == ONE
        assert out.pair.algebra == T.pair.algebra and out.F == T.F
        again, change2 = canonicalize_nondegenerate(out)
        assert change2.is_identity() and again.F == out.F


def test_canonicalize_rotation():
    T = canonical_triple(2)
    a, b = S(3) / 5, S(4) / 5
    P = [[1, 0, 0, 0], [0, a, -b, 0], [0, b, a, 0], [0, 0, 0, 1]]
    rotated = BilinearTriple(change_basis(T.pair, P), T.F.transform(P))
    out, _ = canonicalize_nondegenerate(rotated)
    assert out.pair.algebra.products() == quadric_nondegenerate(2).algebra.products()
    assert out.F == T.F


def test_canonicalize_conic_scalar_only():
    out, change = canonicalize_nondegenerate(BilinearTriple.from_pair(truncated(3)))
    assert change.form_scale == -1 and change.is_identity()
    assert gram_matrix(out) == [(0, 0, 1), (0, -1, 0), (1, 0, 0)]


def test_canonicalize_rank_check():
    with pytest.raises(TripleError):
        canonicalize_nondegenerate(BilinearTriple.from_pair(corank_one(n=3)))


def test_not_representable():
    # e1^2 = e3, e2^2 = 2 e3: the form on W has discriminant 2, not a square
    A = LocalAlgebra(4, {(1, 1): (0, 0, 0, 1), (2, 2): (0, 0, 0, 2)})
    pair = PointedPair(A, (unit_vec(4, 1), unit_vec(4, 2)), unit_vec(4, 3))
    with pytest.raises(NotRepresentable):
        canonicalize_nondegenerate(BilinearTriple.from_pair(pair))


def test_hyperbolic_fallback():
    # W basis e1, e2+e3, e2-e3 has pivots 1, 2, 2; only the pairing trick works
    p = quadric_nondegenerate(3)
    N = p.dim
    e = lambda i: unit_vec(N, i)
    W = (e(1), tuple(x + y for x, y in zip(e(2), e(3))), tuple(x - y for x, y in zip(e(2), e(3))))
    T = BilinearTriple.from_pair(PointedPair(p.algebra, W, p.complement))
    out, change = canonicalize_nondegenerate(T)
    assert out.pair.algebra.products() == p.algebra.products()
    assert out.F == canonical_quadric_form(3)


def test_unit_pairing_on_random_triples():
    rng = random.Random(41)
    for n in (1, 2, 3):
        for _ in range(4):
            T = conjugate_triple(quadric_nondegenerate(n), canonical_quadric_form(n), rng)
            pair, F = T.pair, T.F
            one = pair.algebra.one()
            for w in pair.W:
                assert evaluate_form(F, [one, w]) == 0
            # F(1, b) depends only on the complement coordinate of b
            c = evaluate_form(F, [one, pair.complement])
            for _ in range(3):
                b = tuple(random_scalar(rng, bound=3) for _ in range(pair.dim))
                b = (ZERO,) + b[1:]
                assert evaluate_form(F, [one, b]) == c * pair.pi(b)
            G = [[evaluate_form(F, [a, b]) for b in pair.W] for a in pair.W]
            assert det(G)


def test_extract_roundtrip():
    for lam in ([[0, 0], [0, 0]], [[0, 0], [0, 1]], [[I / 2, half], [half, -I / 2]],
                [[1, 2, 0], [2, 0, 1], [0, 1, 5]], [[7]]):
        p = corank_one(lam)
        L, change = extract_lambda(BilinearTriple.from_pair(p))
        assert change.is_identity()
        assert L.lam == tuple(tuple(S(x) if not isinstance(x, Scalar) else x for x in r) for r in lam)
        assert L.case_tag == (GENERIC if len(lam) > 1 else N2_SPLIT)


def test_extract_n2_cases():
    assert extract_lambda(BilinearTriple.from_pair(corank_one_n2("split")))[0].case_tag == N2_SPLIT
    assert extract_lambda(BilinearTriple.from_pair(corank_one_n2("chain")))[0].case_tag == N2_CHAIN


def test_extract_rejects():
    with pytest.raises(TripleError):
        extract_lambda(BilinearTriple.from_pair(quadric_nondegenerate(2)))


def test_identity_lambda_equivalent_to_zero():
    L, _ = extract_lambda(BilinearTriple.from_pair(corank_one([[1, 0], [0, 1]])))
    assert L.lam == ((ONE, ZERO), (ZERO, ONE))
    res = lambda_equivalent(L, LambdaData([[0, 0], [0, 0]], GENERIC))
    assert res.verdict == EQUIVALENT
    assert res.certificate.verify(L.lam, ((ZERO, ZERO), (ZERO, ZERO)))
    assert res.certificate.beta == -1


def test_kernel_in_w_on_random_triples():
    rng = random.Random(51)
    for lam in ([[0, 0], [0, 1]], [[I / 2, half], [half, -I / 2]], [[0, 0, 0], [0, 1, 0], [0, 0, 2]]):
        p = corank_one(lam)
        for _ in range(3):
            T = conjugate_triple(p, build_FW(p, 2), rng, n_orth=p.n - 1, kernel=[p.n - 1])
            ker = _kernel_vector(T.F.gram())
            assert ker[0] == 0 and T.pair.pi(ker) == 0
            L, change = extract_lambda(T)
            assert lambda_equivalent(LambdaData(lam, GENERIC), L)


def test_lambda_equivalent_examples():
    diag = lambda t: LambdaData(block_diag([[0]], [[1]], [[t]]), GENERIC)
    assert lambda_equivalent(diag(2), diag(half)).verdict == EQUIVALENT
    z = LambdaData([[0, 0], [0, 0]], GENERIC)
    d = LambdaData([[0, 0], [0, 1]], GENERIC)
    assert lambda_equivalent(z, d).verdict == NOT_EQUIVALENT
    for L in (z, d, diag(3)):
        res = lambda_equivalent(L, L)
        assert res.verdict == EQUIVALENT and res.certificate.verify(L.lam, L.lam)


def test_lambda_equivalent_tags_and_sizes():
    s, c = LambdaData([[0]], N2_SPLIT), LambdaData([[0]], N2_CHAIN)
    assert lambda_equivalent(s, s) and lambda_equivalent(c, c)
    assert lambda_equivalent(s, c).verdict == NOT_EQUIVALENT
    with pytest.raises(ValueError):
        lambda_equivalent(LambdaData([[0]], GENERIC), LambdaData([[0, 0], [0, 0]], GENERIC))


def test_lambda_equivalent_inconclusive():
    # [[0,a,b],[a,0,c],[b,c,0]] with a^2+b^2+c^2 = 0 has char poly t^3 - 2abc;
    # the two constants differ by 13, which has no cube root in Q(i)
    def mat(a, b, c):
        return [[0, a, b], [a, 0, c], [b, c, 0]]
    L1 = LambdaData(mat(3, 4, 5 * I), GENERIC)
    L2 = LambdaData(mat(5, 12, 13 * I), GENERIC)
    assert lambda_equivalent(L1, L2).verdict == INCONCLUSIVE
    # a cube ratio is found: scaling by 2 multiplies the constant by 8
    L3 = LambdaData(mat(6, 8, 10 * I), GENERIC)
    res = lambda_equivalent(L1, L3)
    assert res.verdict == EQUIVALENT and res.certificate.alpha ** 3 == 8


def test_j_invariant_examples(oracle):
    assert j_invariant_n4(2) == S(27) / 4
    assert j_invariant_n4(half) == S(27) / 4
    assert j_invariant_n4(-1) == S(27) / 4
    for case in oracle["j"]:
        assert j_invariant_n4(parse_scalar(case["t"])) == parse_scalar(case["j"])
    for bad in (0, 1):
        with pytest.raises(ValueError):
            j_invariant_n4(bad)


def test_j_invariant_six_maps():
    rng = random.Random(6)
    for _ in range(50):
        t = random_scalar(rng)
        if t == 0 or t == 1:
            continue
        orbit = [t, 1 / t, 1 - t, (t - 1) / t, t / (t - 1), 1 / (1 - t)]
        assert len({j_invariant_n4(s) for s in orbit}) == 1


def test_labels():
    labels = {}
    for p in standard_pairs():
        if p.name.startswith("corank"):
            labels[p.name] = classify_corank_one(BilinearTriple.from_pair(p)).label
    assert labels["corank_one_n2_split"] == N2_SPLIT
    assert labels["corank_one_n2_chain"] == N2_CHAIN
    n3 = [labels[k] for k in labels if k.startswith("corank_one:") and k.count(";") == 1]
    assert len(set(n3)) == 3


def test_labels_stable_under_conjugation():
    rng = random.Random(77)
    for lam in ([[I / 2, half], [half, -I / 2]], [[0, 0, 0], [0, 1, 0], [0, 0, 2]]):
        p = corank_one(lam)
        base = classify_corank_one(BilinearTriple.from_pair(p)).label
        for _ in range(2):
            T = conjugate_triple(p, build_FW(p, 2), rng, n_orth=p.n - 1, kernel=[p.n - 1])
            assert classify_corank_one(T).label == base


def test_change_of_basis_validation():
    with pytest.raises(ValueError):
        ChangeOfBasis([[1, 0], [1, 1]])
    with pytest.raises(ValueError):
        ChangeOfBasis([[1, 0], [0, 0]])
