"""Canonical forms for quadrics with an additive action.

A :class:`BilinearTriple` is a pointed pair together with an invariant
bilinear form.  Non-degenerate triples are brought to the unique model
``K[e_1..e_n]/(e_i^2 - e_j^2, e_i e_j)``; corank-one triples are reduced to
a symmetric matrix ``lam`` which is then classified up to similarity,
scaling and adding a scalar matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import PointedPair, change_basis
from .catalog import corank_one, quadric_nondegenerate
from .linalg import (QMat, Subspace, det, nullspace, rank, solve, transpose, unit_vec, vadd, vec,
                     vscale, vsub)
from .multilinear import SymForm, build_FW, check_invariance, evaluate_form
from .scalar import I, ONE, ZERO, NotRepresentable, Scalar, as_scalar, kth_roots, sqrt_in_field
from .similarity import char_poly, invariant_factors, p_str, similarity_transform

__all__ = [
    "TripleError",
    "BilinearTriple",
    "ChangeOfBasis",
    "LambdaData",
    "GENERIC",
    "N2_SPLIT",
    "N2_CHAIN",
    "EQUIVALENT",
    "NOT_EQUIVALENT",
    "INCONCLUSIVE",
    "Certificate",
    "Equivalence",
    "CorankOneLabel",
    "gram_matrix",
    "canonical_quadric_form",
    "canonicalize_nondegenerate",
    "extract_lambda",
    "lambda_equivalent",
    "j_invariant_n4",
    "classify_corank_one",
]

GENERIC = "GENERIC_N_GE_3"
N2_SPLIT = "N2_SPLIT"
N2_CHAIN = "N2_CHAIN"

EQUIVALENT = "Equivalent"
NOT_EQUIVALENT = "NotEquivalent"
INCONCLUSIVE = "Inconclusive"


class TripleError(ValueError):
    """The input is not a valid triple for the requested operation."""


@dataclass(frozen=True)
class BilinearTriple:
    """``(R, W, F)`` with ``F`` an invariant symmetric bilinear form."""

    pair: PointedPair
    F: SymForm
    rank: int = field(init=False)

    def __post_init__(self):
        F = self.F
        if F.arity != 2:
            raise TripleError("the form must be bilinear")
        if F.n_vars != self.pair.dim:
            raise TripleError("form and algebra have different dimensions")
        if F[(0, 0)]:
            raise TripleError("F(1, 1) must vanish")
        res = check_invariance(F, self.pair)
        if not res:
            raise TripleError(f"form is not invariant: witness {res.witness}")
        object.__setattr__(self, "rank", rank(F.gram()))

    @classmethod
    def from_pair(cls, pair: PointedPair) -> "BilinearTriple":
        """The triple carrying the explicit form ``F_W`` (degree-2 pairs)."""
        return cls(pair, build_FW(pair, 2))


@dataclass(frozen=True)
class ChangeOfBasis:
    """Invertible matrix whose columns are the new basis in old coordinates.

    ``form_scale`` is the global factor applied to the form.
    """

    matrix: tuple
    form_scale: Scalar = ONE

    def __post_init__(self):
        m = tuple(vec(r) for r in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if tuple(r[0] for r in m) != unit_vec(n, 0):
            raise ValueError("change of basis must fix the unit")
        if not det(m):
            raise ValueError("change of basis must be invertible")

    def is_identity(self) -> bool:
        return QMat.from_rows(self.matrix).is_identity()


def gram_matrix(T: BilinearTriple) -> list:
    return T.F.gram()


def canonical_quadric_form(n: int) -> SymForm:
    """Anti-diagonal form ``F(1, e_{n+1}) = 1``, ``F(e_i, e_i) = -1``."""
    return build_FW(quadric_nondegenerate(n), 2).scale(-1)


def _columns_to_rows(cols: Sequence[Sequence]) -> tuple:
    return tuple(transpose(cols))


def _hyperbolic_pair(B, x, y, p1, p2):
    """Orthonormal pair in ``span(x, y)`` for orthogonal ``x, y`` with
    ``B(x,x) = p1``, ``B(y,y) = p2`` when neither ``-p`` is a square."""
    r = sqrt_in_field(-p2 / p1)
    if r is None:
        raise NotRepresentable("orthonormal basis needs a square root outside Q(i)")
    e = vadd(vscale(r, x), y)
    f = vadd(vscale(-r, x), y)
    h = B(e, f)
    k = (h * 2).inverse() * -1
    u1 = vadd(e, vscale(k, f))
    u2 = vscale(I, vsub(e, vscale(k, f)))
    return u1, u2


def _orthonormalize(F: SymForm, vectors: Sequence[Sequence]) -> tuple:
    """``(sigma, u)`` with ``sigma*F(u_i, u_j) = -delta_ij`` and ``span(u)`` the
    span of ``vectors``; ``sigma = -1/F(v, v)`` for the first orthogonal vector."""

    def B(x, y):
        return evaluate_form(F, [x, y])

    rest = [vec(v) for v in vectors]
    orth, piv = [], []

    def project(v):
        for o, q in zip(orth, piv):
            c = B(v, o)
            if c:
                v = vsub(v, vscale(c / q, o))
        return v

    while rest:
        v = project(rest.pop(0))
        q = B(v, v)
        if not q:
            # isotropic: combine with a vector it pairs with
            for idx, r in enumerate(rest):
                rp = project(r)
                b = B(v, rp)
                if b:
                    old = v
                    v = vadd(v, rp) if B(vadd(v, rp), vadd(v, rp)) else vsub(v, rp)
                    rest[idx] = old
                    break
            else:
                raise TripleError("the form is degenerate on W")
            q = B(v, v)
        orth.append(v)
        piv.append(q)
    if not orth:
        return ONE, []
    sigma = -piv[0].inverse()
    us = []
    pending = None
    for o, q in zip(orth, piv):
        p = sigma * q
        s = sqrt_in_field(-p)
        if s is not None:
            us.append(vscale(s.inverse(), o))
        elif pending is None:
            pending = (o, p)
        else:
            sB = lambda x, y: sigma * B(x, y)
            us.extend(_hyperbolic_pair(sB, pending[0], o, pending[1], p))
            pending = None
    if pending is not None:
        raise NotRepresentable("orthonormal basis needs a square root outside Q(i)")
    return sigma, us


def canonicalize_nondegenerate(T: BilinearTriple) -> tuple:
    """Bring a non-degenerate triple to the quadric model.

    Returns ``(canonical triple, ChangeOfBasis)``.  The change of basis ``P``
    satisfies ``change_basis(T.pair.algebra, P) == model`` and
    ``form_scale * F.transform(P) == canonical form``.
    """
    pair = T.pair
    N = pair.dim
    n = N - 2
    if T.rank != N:
        raise TripleError(f"form has rank {T.rank}, expected {N}")
    A = pair.algebra
    sigma, us = _orthonormalize(T.F, pair.W)
    top = A.multiply(us[0], us[0])
    P = _columns_to_rows([A.one(), *us, top])
    if not det(P):
        raise TripleError("u_1^2 is not independent of W")
    model = quadric_nondegenerate(n)
    if change_basis(A, P).products() != model.algebra.products():
        raise TripleError("structure constants do not reduce to the quadric model")
    Fc = T.F.transform(P).scale(sigma)
    if Fc != canonical_quadric_form(n):
        raise TripleError("form does not reduce to the canonical Gram matrix")
    return BilinearTriple(model, Fc), ChangeOfBasis(P, sigma)


@dataclass(frozen=True)
class LambdaData:
    lam: tuple
    case_tag: str

    def __post_init__(self):
        lam = tuple(vec(r) for r in self.lam)
        object.__setattr__(self, "lam", lam)
        m = len(lam)
        if any(len(r) != m for r in lam):
            raise ValueError("lam must be square")
        if any(lam[i][j] != lam[j][i] for i in range(m) for j in range(m)):
            raise ValueError("lam must be symmetric")
        if self.case_tag not in (GENERIC, N2_SPLIT, N2_CHAIN):
            raise ValueError(f"unknown case tag {self.case_tag!r}")


def _kernel_vector(gram) -> tuple:
    ker = nullspace(gram)
    if len(ker) != 1:
        raise TripleError(f"kernel has dimension {len(ker)}, expected 1")
    v = ker[0]
    lead = next(x for x in v if x)
    return vscale(lead.inverse(), v)


def extract_lambda(T: BilinearTriple) -> tuple:
    """Reduce a corank-one triple to ``(LambdaData, ChangeOfBasis)``.

    The new basis is ``1, u_1..u_{n-1}, e_n, e_{n+1}`` where ``e_n`` spans
    the kernel, the ``u_i`` are orthonormal for ``-sigma*F`` and
    ``e_{n+1} = u_1^2 - beta*e_n`` with ``beta`` the ``e_n``-coordinate of
    ``u_1^2`` in the adapted basis.  Then ``u_i u_j = delta_ij e_{n+1} +
    lam_ij e_n``.
    """
    pair = T.pair
    A = pair.algebra
    N = pair.dim
    n = N - 2
    if T.rank != N - 1:
        raise TripleError(f"form has rank {T.rank}, expected {N - 1}")
    if n < 2:
        raise TripleError("corank-one reduction needs n >= 2")
    en = _kernel_vector(T.F.gram())
    if en[0] or pair.pi(en):
        raise TripleError("kernel of the form is not contained in W")
    span = Subspace(N, [en])
    V = []
    for w in pair.W:
        if not span.contains(w):
            V.append(w)
            span = span + Subspace(N, [w])
    sigma, us = _orthonormalize(T.F, V)
    sq = A.multiply(us[0], us[0])
    coords = solve(transpose([A.one(), *us, en, pair.complement]), sq)
    beta = coords[n]
    top = vsub(sq, vscale(beta, en))
    P = _columns_to_rows([A.one(), *us, en, top])
    if not det(P):
        raise TripleError("the reduced basis is degenerate")
    newA = change_basis(A, P)
    lam = [[ZERO] * (n - 1) for _ in range(n - 1)]
    for i in range(1, n):
        for j in range(i, n):
            p = newA.basis_product(i, j)
            expect_top = ONE if i == j else ZERO
            if p[n + 1] != expect_top or any(p[k] for k in range(N) if k not in (n, n + 1)):
                raise TripleError("products of V do not have the corank-one shape")
            lam[i - 1][j - 1] = lam[j - 1][i - 1] = p[n]
    change = ChangeOfBasis(P, sigma)
    if n == 2:
        p = newA.basis_product(1, 3)
        if any(p[k] for k in (0, 1, 3)):
            raise TripleError("unexpected product e_1 e_3")
        tag = N2_CHAIN if p[2] else N2_SPLIT
        return LambdaData(lam, tag), change
    if newA.products() != corank_one(lam).algebra.products():
        raise TripleError("structure constants do not match the corank-one family")
    return LambdaData(lam, GENERIC), change


# -- equivalence of lambda matrices ---------------------------------------------
@dataclass(frozen=True)
class Certificate:
    """``L2 = X^-1 (alpha*L1 + beta*I) X``."""

    alpha: Scalar
    beta: Scalar
    X: tuple

    def verify(self, L1: Sequence[Sequence], L2: Sequence[Sequence]) -> bool:
        m = len(L1)
        Aq = QMat.from_rows(L1).scale(self.alpha) + QMat.identity(m).scale(self.beta)
        Xq = QMat.from_rows(self.X)
        return bool(det(self.X)) and Aq @ Xq == Xq @ QMat.from_rows(L2)


@dataclass(frozen=True)
class Equivalence:
    verdict: str
    certificate: Optional[Certificate] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict == EQUIVALENT


def _trace_normalized(L) -> tuple:
    m = len(L)
    t = sum((as_scalar(L[i][i]) for i in range(m)), ZERO) / m
    return tuple(tuple(as_scalar(L[i][j]) - (t if i == j else ZERO) for j in range(m))
                 for i in range(m)), t


def _coeffs(A) -> dict:
    """Nonzero ``c_j`` (coefficient of ``t^(m-j)``) of the characteristic polynomial."""
    cp = char_poly(A)
    m = len(A)
    return {j: cp[m - j] for j in range(2, m + 1) if m - j < len(cp) and cp[m - j]}


def _scaled(A, alpha) -> tuple:
    return tuple(tuple(x * alpha for x in r) for r in A)


def _ext_gcd_exponents(js: Sequence[int]) -> tuple:
    """``(g, u)`` with ``g = gcd(js) = sum u_j * j``."""
    g, u = js[0], {js[0]: 1}
    for j in js[1:]:
        # extended Euclid on (g, j)
        a, b, x0, x1, y0, y1 = g, j, 1, 0, 0, 1
        while b:
            q = a // b
            a, b = b, a - q * b
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        u = {k: v * x0 for k, v in u.items()}
        u[j] = u.get(j, 0) + y0
        g = a
    return g, u


def _degree_pattern(A) -> list:
    return [len(f) - 1 for f in invariant_factors(A)]


def _certificate(L1, L2, alpha) -> Certificate:
    m = len(L1)
    tr1 = sum((as_scalar(L1[i][i]) for i in range(m)), ZERO)
    tr2 = sum((as_scalar(L2[i][i]) for i in range(m)), ZERO)
    beta = (tr2 - alpha * tr1) / m
    target = tuple(tuple(as_scalar(L1[i][j]) * alpha + (beta if i == j else ZERO)
                         for j in range(m)) for i in range(m))
    X = similarity_transform(target, L2, rng=random.Random(0))
    if X is None:
        raise AssertionError("similar matrices without a transform")
    cert = Certificate(alpha, beta, tuple(X))
    if not cert.verify(L1, L2):
        raise AssertionError("similarity certificate failed verification")
    return cert


def lambda_equivalent(L1: LambdaData, L2: LambdaData) -> Equivalence:
    """Is ``L2.lam`` similar to ``alpha*L1.lam + beta*I`` for some ``alpha != 0``?"""
    if L1.case_tag != L2.case_tag:
        return Equivalence(NOT_EQUIVALENT, reason="case tags differ")
    if L1.case_tag != GENERIC:
        return Equivalence(EQUIVALENT, reason="same n = 2 case")
    m = len(L1.lam)
    if m != len(L2.lam):
        raise ValueError("lambda matrices have different sizes")
    A1, _ = _trace_normalized(L1.lam)
    A2, _ = _trace_normalized(L2.lam)
    z1 = not any(any(r) for r in A1)
    z2 = not any(any(r) for r in A2)
    if z1 and z2:
        return Equivalence(EQUIVALENT, _certificate(L1.lam, L2.lam, ONE), "both scalar")
    if z1 != z2:
        return Equivalence(NOT_EQUIVALENT, reason="exactly one is scalar")
    c1, c2 = _coeffs(A1), _coeffs(A2)
    if set(c1) != set(c2):
        return Equivalence(NOT_EQUIVALENT, reason="characteristic polynomial patterns differ")
    if not c1:
        roots, candidates = [ONE], [ONE]
        g = 1
    else:
        js = sorted(c1)
        ratios = {j: c2[j] / c1[j] for j in js}
        g, u = _ext_gcd_exponents(js)
        gamma = ONE
        for j, e in u.items():
            gamma = gamma * (ratios[j] ** e)
        roots = kth_roots(gamma, g)
        candidates = [a for a in roots if all(a ** j == ratios[j] for j in js)]
    for alpha in candidates:
        if invariant_factors(A2) == invariant_factors(_scaled(A1, alpha)):
            return Equivalence(EQUIVALENT, _certificate(L1.lam, L2.lam, alpha))
    if len(roots) < g and _degree_pattern(A1) == _degree_pattern(A2):
        return Equivalence(INCONCLUSIVE, reason="scaling factor may lie outside Q(i)")
    return Equivalence(NOT_EQUIVALENT, reason="no scaling makes the matrices similar")


def j_invariant_n4(t) -> Scalar:
    """``(t^2 - t + 1)^3 / (t^2 (1 - t)^2)``."""
    t = as_scalar(t)
    if t == 0 or t == 1:
        raise ValueError("j-invariant is undefined at t = 0 and t = 1")
    return (t * t - t + 1) ** 3 / (t * t * (ONE - t) ** 2)


# -- labels ---------------------------------------------------------------------
@dataclass(frozen=True)
class CorankOneLabel:
    case: str
    lam: tuple
    label: str
    change: ChangeOfBasis
    normalizable: bool = True


def _factors_text(A) -> str:
    return ",".join(p_str(f) for f in invariant_factors(A))


def lambda_label(L: LambdaData) -> tuple:
    """``(label, normalizable)``; equal labels mean equivalent matrices."""
    if L.case_tag != GENERIC:
        return L.case_tag, True
    m = len(L.lam)
    A, _ = _trace_normalized(L.lam)
    head = f"{GENERIC}|m={m}"
    if not any(any(r) for r in A):
        return f"{head}|zero", True
    c = _coeffs(A)
    if not c:
        return f"{head}|nilpotent|{_factors_text(A)}", True
    k = min(c)
    roots = kth_roots(c[k].inverse(), k)
    if not roots:
        return f"{head}|NotNormalizable|{_factors_text(A)}", False
    return min(f"{head}|{_factors_text(_scaled(A, a))}" for a in roots), True


def classify_corank_one(T: BilinearTriple) -> CorankOneLabel:
    L, change = extract_lambda(T)
    label, ok = lambda_label(L)
    return CorankOneLabel(L.case_tag, L.lam, label, change, ok)
