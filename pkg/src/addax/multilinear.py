"""Symmetric multilinear forms on a local algebra and their polynomials.

A :class:`SymForm` of arity ``d`` stores one value per sorted multi-index
``i_1 <= ... <= i_d`` of basis indices; the symmetric group action is never
materialized.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Mapping, Optional, Sequence

from .algebra import PointedPair, degree
from .linalg import nullspace, unit_vec, vec
from .poly import HomPoly, Poly, multinomial
from .scalar import ZERO, Scalar, as_scalar

__all__ = [
    "SymForm",
    "DegreeError",
    "InvarianceResult",
    "polarize",
    "form_to_polynomial",
    "evaluate_form",
    "check_invariance",
    "is_invariant_form",
    "build_FW",
    "product_form",
    "hypersurface_equation",
    "invariant_linear_forms",
]


class DegreeError(ValueError):
    """The pair has degree < 2, so it defines no hypersurface of interest."""


def _multiplicities(index: Sequence[int], n: int) -> tuple:
    counts = [0] * n
    for i in index:
        counts[i] += 1
    return tuple(counts)


def _index_of(exps: Sequence[int]) -> tuple:
    return tuple(i for i, k in enumerate(exps) for _ in range(k))


class SymForm:
    """Symmetric ``d``-linear form on ``K^N``, keyed by sorted multi-index."""

    __slots__ = ("n_vars", "arity", "entries")

    def __init__(self, n_vars: int, arity: int, entries: Optional[Mapping] = None):
        self.n_vars = n_vars
        self.arity = arity
        clean = {}
        for key, val in (entries or {}).items():
            key = tuple(sorted(key))
            if len(key) != arity or any(not 0 <= k < n_vars for k in key):
                raise ValueError(f"bad multi-index {key} for arity {arity}, N={n_vars}")
            val = as_scalar(val)
            if val:
                clean[key] = val
        self.entries = clean

    def __getitem__(self, key) -> Scalar:
        return self.entries.get(tuple(sorted(key)), ZERO)

    def is_zero(self) -> bool:
        return not self.entries

    def scale(self, c) -> "SymForm":
        c = as_scalar(c)
        return SymForm(self.n_vars, self.arity, {k: v * c for k, v in self.entries.items()})

    def restriction_to_m_is_zero(self) -> bool:
        return all(0 in k for k in self.entries)

    def gram(self) -> list:
        """Matrix ``F(e_i, e_j)``; arity 2 only."""
        if self.arity != 2:
            raise ValueError("gram matrix needs a bilinear form")
        n = self.n_vars
        return [tuple(self[(i, j)] for j in range(n)) for i in range(n)]

    @classmethod
    def from_gram(cls, gram: Sequence[Sequence]) -> "SymForm":
        n = len(gram)
        entries = {}
        for i in range(n):
            for j in range(i, n):
                if as_scalar(gram[i][j]) != as_scalar(gram[j][i]):
                    raise ValueError("gram matrix must be symmetric")
                entries[(i, j)] = gram[i][j]
        return cls(n, 2, entries)

    def transform(self, P: Sequence[Sequence]) -> "SymForm":
        """Pull back along the basis change whose columns are ``P``."""
        cols = [tuple(as_scalar(P[r][c]) for r in range(len(P))) for c in range(len(P[0]))]
        out = {}
        for key in itertools.combinations_with_replacement(range(len(cols)), self.arity):
            val = evaluate_form(self, [cols[k] for k in key])
            if val:
                out[key] = val
        return SymForm(len(cols), self.arity, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymForm):
            return NotImplemented
        return (self.n_vars, self.arity, self.entries) == (other.n_vars, other.arity, other.entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.entries.items()))
        return f"SymForm(N={self.n_vars}, d={self.arity}, {{{body}}})"


def polarize(f: Poly) -> SymForm:
    """The symmetric form with ``F(v, ..., v) = f(v)``."""
    d = f.degree if isinstance(f, HomPoly) else f.total_degree()
    if d < 1:
        raise ValueError("polarization needs degree >= 1")
    if not f.is_homogeneous():
        raise ValueError("polarization needs a homogeneous polynomial")
    entries = {}
    for exps, c in f.terms.items():
        entries[_index_of(exps)] = c / multinomial(exps)
    return SymForm(f.nvars, d, entries)


def form_to_polynomial(F: SymForm) -> HomPoly:
    terms = {}
    for key, val in F.entries.items():
        exps = _multiplicities(key, F.n_vars)
        terms[exps] = val * multinomial(exps)
    return HomPoly(F.n_vars, F.arity, terms)


def evaluate_form(F: SymForm, args: Sequence[Sequence]) -> Scalar:
    """Full multilinear expansion of ``F(args[0], ..., args[d-1])``."""
    if len(args) != F.arity:
        raise ValueError(f"form has arity {F.arity}, got {len(args)} arguments")
    supports = []
    for a in args:
        if len(a) != F.n_vars:
            raise ValueError("argument has the wrong dimension")
        sup = [(i, as_scalar(x)) for i, x in enumerate(a) if x]
        if not sup:
            return ZERO
        supports.append(sup)
    total = ZERO
    entries = F.entries
    for combo in itertools.product(*supports):
        val = entries.get(tuple(sorted(i for i, _ in combo)))
        if val is None:
            continue
        for _, x in combo:
            val = val * x
        total = total + val
    return total


@dataclass(frozen=True)
class InvarianceResult:
    """Outcome of the derivation check; falsy when a violation was found."""

    ok: bool
    witness: Optional[tuple] = None  # (W-basis index, multi-index, value)

    def __bool__(self) -> bool:
        return self.ok


def _star_sum(F: SymForm, left_mult, key: tuple) -> Scalar:
    """``sum_k F(b_1, ..., a b_k, ..., b_d)`` for basis arguments ``key``."""
    total = ZERO
    entries = F.entries
    for pos, b in enumerate(key):
        rest = key[:pos] + key[pos + 1:]
        for l, c in left_mult[b]:
            val = entries.get(tuple(sorted(rest + (l,))))
            if val is not None:
                total = total + c * val
    return total


def _algebra_and_w(pair):
    """Accept a pair or a bare ``(algebra, W)``; W need not generate here."""
    if isinstance(pair, PointedPair):
        return pair.algebra, pair.W
    A, W = pair
    return A, tuple(vec(w) for w in W)


def _left_mult_tables(pair) -> list:
    A, W = _algebra_and_w(pair)
    n = A.dim
    out = []
    for w in W:
        cols = []
        for b in range(n):
            prod = A.multiply(w, unit_vec(n, b))
            cols.append(tuple((l, c) for l, c in enumerate(prod) if c))
        out.append(cols)
    return out


def star_sums(F: SymForm, pair: PointedPair):
    """Yield ``(W index, multi-index, sum)`` over all sorted basis tuples."""
    tables = _left_mult_tables(pair)
    n = _algebra_and_w(pair)[0].dim
    for ai, table in enumerate(tables):
        for key in itertools.combinations_with_replacement(range(n), F.arity):
            yield ai, key, _star_sum(F, table, key)


def check_invariance(F: SymForm, pair: PointedPair) -> InvarianceResult:
    """Exhaustive check of ``sum_k F(b_1, .., a b_k, .., b_d) = 0``.

    ``a`` runs over the W-basis and the ``b``'s over all basis tuples (the sum
    is symmetric in the ``b``'s, so sorted tuples suffice).  ``pair`` may also
    be a bare ``(algebra, W)``.
    """
    if F.n_vars != _algebra_and_w(pair)[0].dim:
        raise ValueError("form and pair live on different dimensions")
    for ai, key, s in star_sums(F, pair):
        if s:
            return InvarianceResult(False, (ai, key, s))
    return InvarianceResult(True)


def is_invariant_form(F: SymForm, pair: PointedPair) -> bool:
    if F.n_vars != pair.dim:
        return False
    if F[(0,) * F.arity]:
        return False
    if F.restriction_to_m_is_zero():
        return False
    return bool(check_invariance(F, pair))


def build_FW(pair: PointedPair, d: Optional[int] = None) -> SymForm:
    """The explicit invariant form of degree ``d = degree(pair)``.

    For basis arguments with ``k`` units and the rest in m, the value is
    ``(-1)^k k! (d-k-1)! pi(product of the m-arguments)``; the all-unit
    value is 0.
    """
    if d is None:
        d = degree(pair)
    if d < 2:
        raise DegreeError(f"pair has degree {d}; need at least 2")
    A = pair.algebra
    n = A.dim
    entries = {}
    # products of sorted m-index tuples are shared between keys
    prod_cache: dict = {(): A.one()}

    def product(idx):
        if idx not in prod_cache:
            prod_cache[idx] = A.multiply(product(idx[:-1]), unit_vec(n, idx[-1]))
        return prod_cache[idx]

    for key in itertools.combinations_with_replacement(range(n), d):
        k = key.count(0)
        if k == d:
            continue
        p = product(key[k:])
        val = pair.pi(p)
        if val:
            coef = (-1) ** k * factorial(k) * factorial(d - k - 1)
            entries[key] = val * coef
    return SymForm(n, d, entries)


def product_form(F1: SymForm, F2: SymForm) -> SymForm:
    if F1.n_vars != F2.n_vars:
        raise ValueError("forms live on different dimensions")
    return polarize(form_to_polynomial(F1) * form_to_polynomial(F2))


def hypersurface_equation(pair: PointedPair) -> HomPoly:
    """Equation of the orbit-closure hypersurface, leading coefficient 1."""
    return form_to_polynomial(build_FW(pair)).normalized()


def invariant_linear_forms(pair: PointedPair) -> list:
    """Basis of linear forms ``f`` with ``f(1) = 0`` and ``f(a b) = 0`` for all
    ``a`` in W and basis ``b``: the candidates for an invariant linear form."""
    A = pair.algebra
    n = A.dim
    rows = [unit_vec(n, 0)]
    for w in pair.W:
        for b in range(n):
            rows.append(A.multiply(w, unit_vec(n, b)))
    return nullspace(rows, n)


def format_entries(F: SymForm) -> dict:
    return {",".join(str(i) for i in k): str(v) for k, v in sorted(F.entries.items())}
