"""Named algebras and pointed pairs.

Names accepted by :func:`catalog` (``:`` separates a parameter):

``truncated:k``
    ``K[x]/(x^k)`` with basis ``1, x, ..., x^{k-1}``; as a pair,
    ``W = <x, ..., x^{k-2}>`` and complement ``x^{k-1}`` (degree ``k-1``).
``square_zero:m``
    ``K[y_1..y_m]/(y_i y_j)``; an algebra only (no hyperplane generates).
``quadric_nondegenerate:n``
    ``K[e_1..e_n]/(e_i^2 - e_j^2, e_i e_j)`` with ``e_{n+1} = e_1^2``.
``corank_one:<rows>``
    the corank-one family with symmetric matrix ``lam``; rows are separated
    by ``;`` and entries by ``,`` (e.g. ``corank_one:0,0;0,1``).
``corank_one_zero:n``
    the same family with ``lam = 0`` of size ``n-1``.
``corank_one_n2_split`` / ``corank_one_n2_chain``
    ``K[e_1,e_2]/(e_1^3, e_1e_2, e_2^2)`` and ``K[e_1]/(e_1^4)`` with
    ``e_2 = e_1^3, e_3 = e_1^2``.

Extra JSON files found in the directory named by ``ADDAX_CATALOG_DIR`` are
available under their file stem.
"""

from __future__ import annotations

import os
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .algebra import LocalAlgebra, PointedPair, load_json
from .linalg import unit_vec, vec
from .scalar import ZERO, Scalar, as_scalar, parse_scalar

__all__ = [
    "catalog",
    "catalog_names",
    "truncated",
    "square_zero",
    "quadric_nondegenerate",
    "corank_one",
    "corank_one_n2",
    "gantmacher_block",
    "block_diag",
    "parse_lambda",
    "standard_pairs",
]

CATALOG_ENV = "ADDAX_CATALOG_DIR"


def _e(n: int, *terms) -> tuple:
    """Vector of length n from (index, coefficient) pairs."""
    out = [ZERO] * n
    for k, c in terms:
        out[k] = out[k] + as_scalar(c)
    return tuple(out)


def truncated(k: int, as_pair: bool = True):
    """``K[x]/(x^k)``; basis ``x^0 .. x^{k-1}``."""
    if k < 1:
        raise ValueError("truncated algebra needs k >= 1")
    products = {}
    for i in range(1, k):
        for j in range(i, k):
            if i + j < k:
                products[(i, j)] = _e(k, (i + j, 1))
    A = LocalAlgebra(k, products, name=f"truncated:{k}")
    if not as_pair:
        return A
    if k < 3:
        raise ValueError("truncated:k is a pointed pair only for k >= 3")
    W = tuple(unit_vec(k, i) for i in range(1, k - 1))
    return PointedPair(A, W, unit_vec(k, k - 1), name=f"truncated:{k}")


def square_zero(m: int) -> LocalAlgebra:
    return LocalAlgebra(m + 1, {}, name=f"square_zero:{m}")


def quadric_nondegenerate(n: int) -> PointedPair:
    """``K[e_1..e_n]/(e_i^2 - e_j^2, e_i e_j)``, ``W = <e_1..e_n>``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    N = n + 2
    products = {(i, i): _e(N, (n + 1, 1)) for i in range(1, n + 1)}
    A = LocalAlgebra(N, products, name=f"quadric_nondegenerate:{n}")
    W = tuple(unit_vec(N, i) for i in range(1, n + 1))
    return PointedPair(A, W, unit_vec(N, n + 1), name=f"quadric_nondegenerate:{n}")


def _check_symmetric(lam) -> list:
    lam = [vec(r) for r in lam]
    m = len(lam)
    if any(len(r) != m for r in lam):
        raise ValueError("lambda must be a square matrix")
    for i in range(m):
        for j in range(m):
            if lam[i][j] != lam[j][i]:
                raise ValueError("lambda must be symmetric")
    return lam


def corank_one(lam: Optional[Sequence[Sequence]] = None, n: Optional[int] = None) -> PointedPair:
    """The corank-one family driven by a symmetric ``(n-1) x (n-1)`` matrix.

    Basis ``1, e_1..e_{n-1}, e_n, e_{n+1}`` with ``e_i e_j = delta_ij e_{n+1}
    + lam_ij e_n`` for ``i, j < n`` and ``e_n m = e_{n+1} m = 0``.
    """
    if lam is None:
        if n is None:
            raise ValueError("give lam or n")
        lam = [[0] * (n - 1) for _ in range(n - 1)]
    lam = _check_symmetric(lam)
    m = len(lam)
    if n is None:
        n = m + 1
    if m != n - 1 or n < 2:
        raise ValueError("lambda must be (n-1) x (n-1) with n >= 2")
    N = n + 2
    products = {}
    for i in range(1, n):
        for j in range(i, n):
            terms = [(n, lam[i - 1][j - 1])]
            if i == j:
                terms.append((n + 1, 1))
            v = _e(N, *terms)
            if any(v):
                products[(i, j)] = v
    label = "corank_one:" + ";".join(",".join(str(x) for x in r) for r in lam)
    A = LocalAlgebra(N, products, name=label)
    W = tuple(unit_vec(N, i) for i in range(1, n + 1))
    return PointedPair(A, W, unit_vec(N, n + 1), name=label)


def corank_one_n2(kind: str) -> PointedPair:
    """The two exceptional ``n = 2`` algebras: ``"split"`` or ``"chain"``."""
    N = 4
    if kind == "split":
        products = {(1, 1): _e(N, (3, 1))}
    elif kind == "chain":
        # e1 = x, e2 = x^3, e3 = x^2
        products = {(1, 1): _e(N, (3, 1)), (1, 3): _e(N, (2, 1))}
    else:
        raise ValueError("kind must be 'split' or 'chain'")
    name = f"corank_one_n2_{kind}"
    A = LocalAlgebra(N, products, name=name)
    return PointedPair(A, (unit_vec(N, 1), unit_vec(N, 2)), unit_vec(N, 3), name=name)


def gantmacher_block(size: int, lam=0) -> list:
    """Symmetric normal-form block ``lam*I + (S + S^T)/2 + (i/2) K``.

    ``S`` is the shift matrix and ``K`` has ``+1`` on the band just above the
    anti-diagonal and ``-1`` on the band just below it.  The block is similar
    to a single Jordan block of the given size with eigenvalue ``lam``.
    """
    lam = as_scalar(lam)
    half, ihalf = Scalar(Fraction(1, 2)), Scalar(0, Fraction(1, 2))
    rows = [[ZERO] * size for _ in range(size)]
    for r in range(size):
        rows[r][r] = rows[r][r] + lam
        if r + 1 < size:
            rows[r][r + 1] = rows[r][r + 1] + half
            rows[r + 1][r] = rows[r + 1][r] + half
        for c in range(size):
            if r + c == size - 2:
                rows[r][c] = rows[r][c] + ihalf
            elif r + c == size:
                rows[r][c] = rows[r][c] - ihalf
    return [tuple(r) for r in rows]


def block_diag(*blocks) -> list:
    size = sum(len(b) for b in blocks)
    rows = [[ZERO] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b):
            for j, x in enumerate(r):
                rows[off + i][off + j] = as_scalar(x)
        off += len(b)
    return [tuple(r) for r in rows]


def parse_lambda(text: str) -> list:
    """``"0,0;0,1"`` -> [[0, 0], [0, 1]] as Scalars."""
    return [tuple(parse_scalar(x) for x in row.split(",")) for row in text.split(";")]


def _user_dir() -> Optional[Path]:
    d = os.environ.get(CATALOG_ENV)
    return Path(d) if d else None


def catalog_names() -> list:
    names = [
        "truncated:<k>",
        "square_zero:<m>",
        "quadric_nondegenerate:<n>",
        "corank_one:<rows>",
        "corank_one_zero:<n>",
        "corank_one_n2_split",
        "corank_one_n2_chain",
    ]
    d = _user_dir()
    if d and d.is_dir():
        names.extend(sorted(p.stem for p in d.glob("*.json")))
    return names


def catalog(name: str, **params):
    """Build a catalog algebra or pair from ``name`` (see module docs)."""
    base, _, arg = name.partition(":")
    if base == "truncated":
        k = params.get("k", int(arg) if arg else None)
        if k is None:
            raise ValueError("truncated needs k")
        return truncated(int(k), as_pair=params.get("as_pair", True))
    if base == "square_zero":
        return square_zero(int(params.get("m", arg or 2)))
    if base == "quadric_nondegenerate":
        return quadric_nondegenerate(int(params.get("n", arg or 1)))
    if base == "corank_one":
        lam = params.get("lam")
        if lam is None and arg:
            lam = parse_lambda(arg)
        return corank_one(lam, params.get("n"))
    if base == "corank_one_zero":
        return corank_one(None, int(params.get("n", arg or 3)))
    if base == "corank_one_n2_split":
        return corank_one_n2("split")
    if base == "corank_one_n2_chain":
        return corank_one_n2("chain")
    d = _user_dir()
    if d is not None and (d / f"{name}.json").is_file():
        return load_json(d / f"{name}.json")
    raise KeyError(f"unknown catalog entry {name!r}")


def standard_pairs() -> list:
    """The catalog pairs exercised by the acceptance checks."""
    pairs = [truncated(3), truncated(4), truncated(5)]
    pairs += [quadric_nondegenerate(n) for n in range(1, 6)]
    pairs += [corank_one_n2("split"), corank_one_n2("chain")]
    i2 = Scalar(0, Fraction(1, 2))
    half = Scalar(Fraction(1, 2))
    pairs += [
        corank_one([[0, 0], [0, 0]]),
        corank_one([[0, 0], [0, 1]]),
        corank_one([[i2, half], [half, -i2]]),
        corank_one([[0, 0, 0], [0, 1, 0], [0, 0, 2]]),
        corank_one(block_diag([[1]], gantmacher_block(3, 0))),
        corank_one(block_diag(gantmacher_block(2, 1), [[0]], [[Scalar(1, 1)]])),
    ]
    return pairs
