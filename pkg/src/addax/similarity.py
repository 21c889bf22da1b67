"""Similarity of matrices over Q(i) through invariant factors.

Univariate polynomials are tuples of Scalars, lowest degree first, with no
trailing zeros (the zero polynomial is ``()``).  Invariant factors come from
the Smith normal form of ``tI - A`` over Q(i)[t]; two matrices are similar
exactly when their invariant factors agree, so no eigenvalues are needed.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .linalg import QMat, det, identity, inverse, matmul, nullspace, transpose
from .scalar import ONE, ZERO, as_scalar, random_scalar, render_scalar

__all__ = [
    "UPoly",
    "p_trim",
    "p_add",
    "p_sub",
    "p_mul",
    "p_divmod",
    "p_monic",
    "p_str",
    "invariant_factors",
    "char_poly",
    "is_similar",
    "similarity_transform",
    "cayley_orthogonal",
]

UPoly = tuple


def p_trim(p) -> UPoly:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def p_deg(p: UPoly) -> int:
    return len(p) - 1


def p_add(p: UPoly, q: UPoly) -> UPoly:
    n = max(len(p), len(q))
    return p_trim((p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO)
                  for i in range(n))


def p_neg(p: UPoly) -> UPoly:
    return tuple(-c for c in p)


def p_sub(p: UPoly, q: UPoly) -> UPoly:
    return p_add(p, p_neg(q))


def p_scale(p: UPoly, c) -> UPoly:
    c = as_scalar(c)
    return p_trim(x * c for x in p) if c else ()


def p_mul(p: UPoly, q: UPoly) -> UPoly:
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return p_trim(out)


def p_divmod(p: UPoly, q: UPoly) -> tuple:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [ZERO] * max(len(p) - len(q) + 1, 0)
    inv = q[-1].inverse()
    while len(rem) >= len(q) and rem:
        c = rem[-1] * inv
        shift = len(rem) - len(q)
        quo[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] = rem[shift + i] - c * b
        rem = list(p_trim(rem))
    return p_trim(quo), tuple(rem)


def p_monic(p: UPoly) -> UPoly:
    if not p:
        return p
    return p_scale(p, p[-1].inverse())


def p_str(p: UPoly, var: str = "t") -> str:
    """Render highest degree first, e.g. ``t^2 - 1/4``."""
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if c.is_real():
            neg = c.re < 0
            mag = render_scalar(-c if neg else c)
            body = mono if (mag == "1" and mono) else (mag + ("*" + mono if mono else ""))
        else:
            neg = False
            body = f"({render_scalar(c)})" + ("*" + mono if mono else "")
        parts.append(("-" if neg else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _char_matrix(A: Sequence[Sequence]) -> list:
    """Entries of ``tI - A`` as polynomials."""
    m = len(A)
    return [[p_trim((-as_scalar(A[i][j]),) + ((ONE,) if i == j else ()))
             for j in range(m)] for i in range(m)]


def invariant_factors(A: Sequence[Sequence]) -> list:
    """Monic non-unit invariant factors of ``A``, each dividing the next."""
    M = _char_matrix(A)
    m = len(M)
    diag = []
    for k in range(m):
        while True:
            # smallest-degree nonzero entry of the trailing block becomes pivot
            best = None
            for i in range(k, m):
                for j in range(k, m):
                    if M[i][j] and (best is None or len(M[i][j]) < len(M[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                diag.extend([()] * (m - k))
                return _finish(diag)
            i, j = best
            M[k], M[i] = M[i], M[k]
            for row in M:
                row[k], row[j] = row[j], row[k]
            piv = M[k][k]
            dirty = False
            for i in range(k + 1, m):
                if M[i][k]:
                    q, r = p_divmod(M[i][k], piv)
                    M[i] = [p_sub(a, p_mul(q, b)) for a, b in zip(M[i], M[k])]
                    dirty = dirty or bool(r)
            for j in range(k + 1, m):
                if M[k][j]:
                    q, r = p_divmod(M[k][j], piv)
                    for row in M:
                        row[j] = p_sub(row[j], p_mul(q, row[k]))
                    dirty = dirty or bool(r)
            if dirty:
                continue
            # pivot must divide the whole trailing block
            bad = next(((i, j) for i in range(k + 1, m) for j in range(k + 1, m)
                        if M[i][j] and p_divmod(M[i][j], piv)[1]), None)
            if bad is None:
                diag.append(piv)
                break
            M[k] = [p_add(a, b) for a, b in zip(M[k], M[bad[0]])]
    return _finish(diag)


def _finish(diag: list) -> list:
    return [p_monic(p) for p in diag if len(p) != 1]


def char_poly(A: Sequence[Sequence]) -> UPoly:
    out: UPoly = (ONE,)
    for f in invariant_factors(A):
        out = p_mul(out, f)
    return out


def is_similar(A: Sequence[Sequence], B: Sequence[Sequence]) -> bool:
    return len(A) == len(B) and invariant_factors(A) == invariant_factors(B)


def similarity_transform(A: Sequence[Sequence], B: Sequence[Sequence],
                         rng: Optional[random.Random] = None,
                         attempts: int = 64) -> Optional[list]:
    """An invertible ``X`` with ``A X = X B`` (so ``B = X^-1 A X``), or None.

    Solves the linear system for ``X`` and tries random elements of the
    solution space until one is invertible.
    """
    m = len(A)
    if m != len(B):
        return None
    A = [[as_scalar(x) for x in r] for r in A]
    B = [[as_scalar(x) for x in r] for r in B]
    rows = []
    # unknown X[p][q] sits at column p*m + q
    for i in range(m):
        for j in range(m):
            row = [ZERO] * (m * m)
            for k in range(m):
                row[k * m + j] = row[k * m + j] + A[i][k]
                row[i * m + k] = row[i * m + k] - B[k][j]
            rows.append(row)
    basis = nullspace(rows, m * m)
    if not basis:
        return None
    rng = rng or random.Random(0)
    for attempt in range(attempts):
        if attempt == 0:
            coeffs = [ONE] * len(basis)
        else:
            coeffs = [random_scalar(rng, bound=5, complex_=False) for _ in basis]
        flat = [ZERO] * (m * m)
        for c, v in zip(coeffs, basis):
            if c:
                flat = [x + c * y for x, y in zip(flat, v)]
        X = [tuple(flat[i * m:(i + 1) * m]) for i in range(m)]
        if det(X):
            return X
    return None


def cayley_orthogonal(m: int, rng: random.Random, bound: int = 3,
                      complex_: bool = True) -> list:
    """Random ``Q`` with ``Q^T Q = I``: ``(I - S)(I + S)^-1`` for skew ``S``."""
    while True:
        S = [[ZERO] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                x = random_scalar(rng, bound=bound, complex_=complex_)
                S[i][j], S[j][i] = x, -x
        I = identity(m)
        plus = [[I[i][j] + S[i][j] for j in range(m)] for i in range(m)]
        if not det(plus):
            continue
        minus = [[I[i][j] - S[i][j] for j in range(m)] for i in range(m)]
        Q = matmul(minus, inverse(plus))
        assert QMat.from_rows(matmul(transpose(Q), Q)).is_identity()
        return Q
