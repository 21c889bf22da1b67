"""Random valid triples for property and acceptance tests."""


from addax.algebra import PointedPair, change_basis
from addax.classify import BilinearTriple
from addax.linalg import det, matmul, transpose, vadd, vscale, zero_vec
from addax.scalar import ONE, ZERO, random_scalar
from addax.similarity import cayley_orthogonal


def random_basis_change(N, rng, bound=3):
    """Random invertible ``P`` fixing the unit (first row and column ``e_0``)."""
    while True:
        B = [[random_scalar(rng, bound=bound) for _ in range(N - 1)] for _ in range(N - 1)]
        if det(B):
            break
    return [[ONE] + [ZERO] * (N - 1)] + [[ZERO] + row for row in B]


def conjugate_triple(pair, F, rng, n_orth=None, kernel=None):
    """A random triple isomorphic to ``(pair, F)``.

    The first ``n_orth`` W-vectors (default: all) must be orthonormal for
    ``F`` up to sign; they are rotated by a random Q(i)-orthogonal matrix and
    scaled.  ``kernel`` indices of W are mixed into the others freely.
    """
    N = pair.dim
    P = random_basis_change(N, rng)
    moved = change_basis(pair, P)
    Fm = F.transform(P)
    W = list(moved.W)
    k = len(W) if n_orth is None else n_orth
    Q = cayley_orthogonal(k, rng, bound=2) if k > 1 else [[ONE]]
    s = random_scalar(rng, bound=4, nonzero=True)
    newW = []
    for i in range(k):
        v = zero_vec(N)
        for j in range(k):
            v = vadd(v, vscale(Q[j][i] * s, W[j]))
        for j in kernel or ():
            v = vadd(v, vscale(random_scalar(rng, bound=3), W[j]))
        newW.append(v)
    for j in kernel or ():
        newW.append(vscale(random_scalar(rng, bound=3, nonzero=True), W[j]))
    w_shift = zero_vec(N)
    for w in W:
        w_shift = vadd(w_shift, vscale(random_scalar(rng, bound=3), w))
    comp = vadd(vscale(random_scalar(rng, bound=3, nonzero=True), moved.complement), w_shift)
    new_pair = PointedPair(moved.algebra, tuple(newW), comp)
    c = random_scalar(rng, bound=4, nonzero=True)
    return BilinearTriple(new_pair, Fm.scale(c))


def conjugate_lambda(lam, rng):
    """``alpha * Q^T lam Q + beta * I`` for random orthogonal ``Q``."""
    m = len(lam)
    Q = cayley_orthogonal(m, rng, bound=2) if m > 1 else [[ONE]]
    alpha = random_scalar(rng, bound=4, nonzero=True)
    beta = random_scalar(rng, bound=4)
    M = matmul(matmul(transpose(Q), lam), Q)
    return [[M[i][j] * alpha + (beta if i == j else ZERO) for j in range(m)] for i in range(m)]
