"""Finite-dimensional local algebras given by structure constants.

Basis convention: ``e_0 = 1`` and the maximal ideal is spanned by
``e_1, ..., e_{N-1}``.  Elements are plain tuples of :class:`Scalar`
coordinates in that basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .linalg import (Subspace, Vector, inverse, is_zero_vec, nullspace, rank, transpose, unit_vec,
                     vadd, vec, vscale, zero_vec)
from .scalar import ZERO, Scalar, parse_scalar, render_scalar

__all__ = [
    "AlgebraError",
    "ValidationReport",
    "LocalAlgebra",
    "PointedPair",
    "PairError",
    "validate_algebra",
    "multiply",
    "ideal_filtration",
    "generates",
    "degree",
    "largest_ideal_in",
    "is_ideal",
    "Quotient",
    "quotient",
    "quotient_pair",
    "pad_pair",
    "change_basis",
    "load_json",
    "loads_json",
    "dump_json",
]


@dataclass(frozen=True)
class ValidationReport:
    """Why a structure-constant table is not a local algebra."""

    axiom: str
    message: str
    witness: tuple = ()

    def to_dict(self) -> dict:
        return {"valid": False, "axiom": self.axiom, "message": self.message,
                "witness": list(self.witness)}


class AlgebraError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(f"{report.axiom}: {report.message}")
        self.report = report


class PairError(ValueError):
    pass


Table = Mapping[tuple, Sequence]


def _normalize_table(dim: int, table: Table) -> dict:
    """Check shape and symmetry; return {(i, j): vector} for 1 <= i <= j."""
    if dim < 1:
        raise AlgebraError(ValidationReport("shape", "dimension must be positive"))
    out: dict = {}
    for key, coords in table.items():
        i, j = key
        if not (1 <= i < dim and 1 <= j < dim):
            raise AlgebraError(ValidationReport(
                "shape", f"product index ({i},{j}) outside 1..{dim - 1}", (i, j)))
        if len(coords) != dim:
            raise AlgebraError(ValidationReport(
                "shape", f"product e{i}*e{j} has {len(coords)} coordinates, expected {dim}",
                (i, j)))
        v = vec(coords)
        k = (min(i, j), max(i, j))
        if k in out and out[k] != v:
            raise AlgebraError(ValidationReport(
                "commutativity", f"e{i}*e{j} != e{j}*e{i}", k))
        out[k] = v
    return out


class LocalAlgebra:
    """Commutative associative unital algebra with nilpotent maximal ideal.

    ``products`` maps index pairs ``(i, j)`` with ``1 <= i, j < dim`` to the
    coordinate vector of ``e_i * e_j``; missing pairs are zero.  The
    constructor checks every axiom and raises :class:`AlgebraError` with a
    :class:`ValidationReport` on the first violation.
    """

    def __init__(self, dim: int, products: Table, name: Optional[str] = None):
        prod = _normalize_table(dim, products)
        self.dim = dim
        self.name = name
        n = dim
        table = [[zero_vec(n) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            table[0][i] = table[i][0] = unit_vec(n, i)
        for (i, j), v in prod.items():
            table[i][j] = table[j][i] = v
        self._table = table
        # sparse view: _sparse[i][j] = ((k, c), ...)
        self._sparse = [
            [tuple((k, c) for k, c in enumerate(table[i][j]) if c) for j in range(n)]
            for i in range(n)
        ]
        report = self._check_axioms()
        if report is not None:
            raise AlgebraError(report)
        self._filtration: Optional[list] = None

    # -- axioms -------------------------------------------------------------
    def _check_axioms(self) -> Optional[ValidationReport]:
        n = self.dim
        for i in range(1, n):
            for j in range(i, n):
                if self._table[i][j][0]:
                    return ValidationReport(
                        "maximal_ideal",
                        f"e{i}*e{j} has a nonzero unit coordinate, so m is not closed",
                        (i, j))
        for i in range(1, n):
            for j in range(1, n):
                left_ij = self._table[i][j]
                for k in range(1, n):
                    lhs = self.multiply(left_ij, unit_vec(n, k))
                    rhs = self.multiply(unit_vec(n, i), self._table[j][k])
                    if lhs != rhs:
                        return ValidationReport(
                            "associativity", f"(e{i}e{j})e{k} != e{i}(e{j}e{k})", (i, j, k))
        chain = self._compute_filtration()
        if chain is None:
            return ValidationReport("nilpotency", "m is not nilpotent (m^k stabilizes at a nonzero space)")
        return None

    def _compute_filtration(self):
        n = self.dim
        m_basis = [unit_vec(n, i) for i in range(1, n)]
        current = Subspace(n, m_basis)
        chain = [current]
        while not current.is_zero():
            prods = [self.multiply(u, v) for u in m_basis for v in current.basis]
            nxt = Subspace(n, prods)
            if nxt.dim == current.dim:
                return None
            chain.append(nxt)
            current = nxt
        return chain

    # -- arithmetic ---------------------------------------------------------
    def multiply(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        n = self.dim
        if len(u) != n or len(v) != n:
            raise ValueError(f"elements must have {n} coordinates")
        acc = [ZERO] * n
        sparse = self._sparse
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = sparse[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                cells = row[j]
                if not cells:
                    continue
                c = ui * vj
                for k, t in cells:
                    acc[k] = acc[k] + c * t
        return tuple(acc)

    def product_of(self, elements: Iterable[Sequence[Scalar]]) -> Vector:
        out = self.one()
        for e in elements:
            out = self.multiply(out, e)
        return out

    def basis_product(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def one(self) -> Vector:
        return unit_vec(self.dim, 0)

    def basis(self, i: int) -> Vector:
        return unit_vec(self.dim, i)

    def power(self, u: Sequence[Scalar], k: int) -> Vector:
        out = self.one()
        for _ in range(k):
            out = self.multiply(out, u)
        return out

    def mult_matrix(self, u: Sequence[Scalar]) -> list:
        """Matrix (rows) of ``v -> u*v`` in the standard basis."""
        cols = [self.multiply(u, unit_vec(self.dim, j)) for j in range(self.dim)]
        return transpose(cols)

    def in_maximal_ideal(self, u: Sequence[Scalar]) -> bool:
        return not u[0]

    def maximal_ideal(self) -> Subspace:
        return self.filtration()[0]

    def filtration(self) -> list:
        if self._filtration is None:
            self._filtration = self._compute_filtration()
        return self._filtration

    def products(self) -> dict:
        """Nonzero products ``{(i, j): vector}`` with ``1 <= i <= j``."""
        n = self.dim
        return {
            (i, j): self._table[i][j]
            for i in range(1, n)
            for j in range(i, n)
            if not is_zero_vec(self._table[i][j])
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, LocalAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.products() == other.products()

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.products().items()))))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LocalAlgebra{label} dim={self.dim}>"


def validate_algebra(dim: int, table: Table, name: Optional[str] = None):
    """Return a :class:`LocalAlgebra`, or a :class:`ValidationReport` naming
    the first violated axiom together with witness indices."""
    try:
        return LocalAlgebra(dim, table, name)
    except AlgebraError as exc:
        return exc.report


def multiply(algebra: LocalAlgebra, u, v) -> Vector:
    return algebra.multiply(vec(u), vec(v))


def ideal_filtration(algebra: LocalAlgebra) -> list:
    """``[m, m^2, ..., 0]``; the list ends with the first zero space."""
    return list(algebra.filtration())


def _as_subspace(algebra: LocalAlgebra, w) -> Subspace:
    if isinstance(w, Subspace):
        return w
    return Subspace(algebra.dim, [vec(x) for x in w])


def generates(algebra: LocalAlgebra, w) -> bool:
    """Whether ``W`` together with 1 generates the algebra."""
    w = _as_subspace(algebra, w)
    span = Subspace(algebra.dim, [algebra.one()])
    for _ in range(algebra.dim + 1):
        new = [algebra.multiply(a, b) for a in w.basis for b in span.basis]
        nxt = span + Subspace(algebra.dim, list(w.basis) + new)
        if nxt == span:
            break
        span = nxt
    return span.dim == algebra.dim


def is_ideal(algebra: LocalAlgebra, sub) -> bool:
    sub = _as_subspace(algebra, sub)
    n = algebra.dim
    return all(
        sub.contains(algebra.multiply(v, unit_vec(n, j)))
        for v in sub.basis
        for j in range(1, n)
    )


def largest_ideal_in(algebra: LocalAlgebra, w) -> Subspace:
    """The biggest ideal of the algebra contained in ``W`` (``W`` inside m).

    Iterates ``I <- {x in I : x*m inside I}`` from ``I = W``.
    """
    n = algebra.dim
    current = _as_subspace(algebra, w)
    while not current.is_zero():
        # functionals vanishing on current
        annihilator = nullspace(list(current.basis), n)
        conditions = []
        for phi in annihilator:
            for j in range(1, n):
                ej = unit_vec(n, j)
                conditions.append(tuple(
                    sum((p * c for p, c in zip(phi, algebra.multiply(b, ej))), ZERO)
                    for b in current.basis
                ))
        if not conditions:
            break
        coeffs = nullspace(conditions, current.dim)
        vectors = []
        for c in coeffs:
            x = zero_vec(n)
            for ci, b in zip(c, current.basis):
                if ci:
                    x = vadd(x, vscale(ci, b))
            vectors.append(x)
        nxt = Subspace(n, vectors)
        if nxt == current:
            break
        current = nxt
    return current


@dataclass(frozen=True)
class PointedPair:
    """A local algebra with a generating hyperplane ``W`` of m.

    ``complement`` is an element of m outside ``W``; it fixes the projection
    ``pi: m -> m/W = K`` by ``pi(complement) = 1``.
    """

    algebra: LocalAlgebra
    W: tuple
    complement: Vector
    name: Optional[str] = None
    _pi_row: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        A = self.algebra
        n = A.dim
        W = tuple(vec(w) for w in self.W)
        c = vec(self.complement)
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "complement", c)
        if n < 2:
            raise PairError("a pointed pair needs dim >= 2")
        if len(W) != n - 2:
            raise PairError(f"W must have {n - 2} vectors, got {len(W)}")
        for v in W + (c,):
            if len(v) != n:
                raise PairError(f"vectors must have {n} coordinates")
            if v[0]:
                raise PairError("W and the complement must lie in the maximal ideal")
        basis_m = [v[1:] for v in W + (c,)]
        if rank(basis_m) != n - 1:
            raise PairError("W together with the complement is not a basis of m")
        if not generates(A, W):
            raise PairError("W does not generate the algebra")
        # columns of B are W_1..W_n, c in m-coordinates; pi = last row of B^-1
        inv = inverse(transpose(basis_m))
        object.__setattr__(self, "_pi_row", (ZERO,) + tuple(inv[-1]))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def n(self) -> int:
        return self.algebra.dim - 2

    def pi(self, v: Sequence[Scalar]) -> Scalar:
        """Projection of an element of m onto ``m/W``, normalized by the complement."""
        if v[0]:
            raise ValueError("pi is only defined on the maximal ideal")
        total = ZERO
        for p, x in zip(self._pi_row, v):
            if p and x:
                total = total + p * x
        return total

    def w_subspace(self) -> Subspace:
        return Subspace(self.dim, self.W)

    def adapted_basis(self) -> list:
        """``[1, w_1, ..., w_n, complement]``."""
        return [self.algebra.one(), *self.W, self.complement]

    def w_element(self, coords: Sequence) -> Vector:
        """``sum a_i w_i`` for W-coordinates ``a``."""
        coords = vec(coords)
        if len(coords) != len(self.W):
            raise ValueError(f"expected {len(self.W)} W-coordinates")
        out = zero_vec(self.dim)
        for a, w in zip(coords, self.W):
            if a:
                out = vadd(out, vscale(a, w))
        return out

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<PointedPair{label} dim={self.dim}>"


def degree(pair: PointedPair) -> int:
    """Largest ``d`` such that ``W`` does not contain ``m^d``."""
    w = pair.w_subspace()
    d = 0
    for k, power in enumerate(pair.algebra.filtration(), start=1):
        if not w.contains_subspace(power):
            d = k
    return d


@dataclass(frozen=True)
class Quotient:
    """``R/I`` with its projection.

    ``kept`` are the standard basis indices whose images form the basis of
    the quotient; ``project`` maps coordinates of ``R`` to coordinates of
    ``R/I`` and ``section`` lifts them back by zero-padding.
    """

    algebra: LocalAlgebra
    ideal: Subspace
    kept: tuple

    def project(self, v: Sequence[Scalar]) -> Vector:
        red = self.ideal.reduce(vec(v))
        if red is None:
            return zero_vec(len(self.kept))
        return tuple(red[k] for k in self.kept)

    def section(self, u: Sequence[Scalar]) -> Vector:
        out = [ZERO] * self.ideal.n
        for k, x in zip(self.kept, u):
            out[k] = x
        return tuple(out)


def quotient(algebra: LocalAlgebra, ideal, name: Optional[str] = None) -> Quotient:
    """Quotient by an ideal contained in m."""
    ideal = _as_subspace(algebra, ideal)
    n = algebra.dim
    if any(v[0] for v in ideal.basis):
        raise AlgebraError(ValidationReport("ideal", "ideal must lie in the maximal ideal"))
    if not is_ideal(algebra, ideal):
        raise AlgebraError(ValidationReport("ideal", "subspace is not an ideal"))
    kept = tuple(k for k in range(n) if k not in ideal.pivots)
    q = Quotient(None, ideal, kept)  # type: ignore[arg-type]  # projection only
    products = {}
    for a in range(1, len(kept)):
        for b in range(a, len(kept)):
            p = q.project(algebra.basis_product(kept[a], kept[b]))
            if not is_zero_vec(p):
                products[(a, b)] = p
    qa = LocalAlgebra(len(kept), products, name=name)
    return Quotient(qa, ideal, kept)


def quotient_pair(pair: PointedPair, ideal) -> tuple:
    """Quotient of a pointed pair by an ideal inside ``W``.

    Returns ``(new_pair, quotient)``.
    """
    ideal = _as_subspace(pair.algebra, ideal)
    if not pair.w_subspace().contains_subspace(ideal):
        raise PairError("the ideal must be contained in W")
    q = quotient(pair.algebra, ideal)
    w_img = Subspace(q.algebra.dim, [q.project(w) for w in pair.W])
    new = PointedPair(q.algebra, w_img.basis, q.project(pair.complement),
                      name=f"{pair.name}/I" if pair.name else None)
    return new, q


def change_basis(pair_or_algebra, P: Sequence[Sequence]):
    """Re-express an algebra (or pair) in the basis given by the columns of ``P``.

    ``P`` must fix the unit (first column and first row equal to ``e_0``).
    W-vectors and the complement are transported, so the pair is the same
    object written in new coordinates.
    """
    P = [vec(r) for r in P]
    A = pair_or_algebra.algebra if isinstance(pair_or_algebra, PointedPair) else pair_or_algebra
    n = A.dim
    if P[0] != unit_vec(n, 0) or tuple(r[0] for r in P) != unit_vec(n, 0):
        raise ValueError("change of basis must fix the unit")
    Pinv = inverse(P)
    cols = transpose(P)

    def to_new(v):
        return tuple(sum((a * x for a, x in zip(row, v) if a and x), ZERO) for row in Pinv)

    products = {}
    for i in range(1, n):
        for j in range(i, n):
            p = to_new(A.multiply(cols[i], cols[j]))
            if not is_zero_vec(p):
                products[(i, j)] = p
    newA = LocalAlgebra(n, products, name=A.name)
    if isinstance(pair_or_algebra, PointedPair):
        pr = pair_or_algebra
        return PointedPair(newA, tuple(to_new(w) for w in pr.W), to_new(pr.complement),
                           name=pr.name)
    return newA


def pad_pair(pair: PointedPair, extra: int, position: Optional[int] = None,
             twist: Optional[Sequence[Sequence]] = None) -> PointedPair:
    """Add ``extra`` basis vectors ``z`` with ``z*m = 0`` and put them in ``W``.

    The padded span of ``z`` is an ideal inside ``W``.  ``position`` is where
    the new coordinates are inserted (default: at the end).  ``twist`` is an
    optional ``(dim-1) x extra`` matrix ``phi``; every product ``p`` of the
    original algebra then gains the component ``phi(p)`` along ``z``, which
    keeps the algebra associative.
    """
    A = pair.algebra
    n = A.dim
    pos = n if position is None else position
    if not 1 <= pos <= n:
        raise ValueError("padding position must be inside the maximal ideal block")
    new_n = n + extra
    old_to_new = [k if k < pos else k + extra for k in range(n)]
    z_idx = list(range(pos, pos + extra))
    phi = [vec(r) for r in twist] if twist is not None else None

    def embed(v):
        out = [ZERO] * new_n
        for k, x in enumerate(v):
            out[old_to_new[k]] = x
        if phi is not None:
            for k in range(1, n):
                if v[k]:
                    for t, z in enumerate(z_idx):
                        out[z] = out[z] + v[k] * phi[k - 1][t]
        return tuple(out)

    def plain(v):
        out = [ZERO] * new_n
        for k, x in enumerate(v):
            out[old_to_new[k]] = x
        return tuple(out)

    products = {}
    for (i, j), p in A.products().items():
        products[(old_to_new[i], old_to_new[j])] = embed(p)
    newA = LocalAlgebra(new_n, products, name=f"{A.name}+pad{extra}" if A.name else None)
    W = [plain(w) for w in pair.W] + [unit_vec(new_n, z) for z in z_idx]
    return PointedPair(newA, tuple(W), plain(pair.complement),
                       name=f"{pair.name}+pad{extra}" if pair.name else None)


# -- JSON file format ---------------------------------------------------------
def _parse_vector(items, length: int, what: str) -> Vector:
    if not isinstance(items, list) or len(items) != length:
        raise ValueError(f"{what} must be a list of {length} scalars")
    return tuple(parse_scalar(str(x)) for x in items)


def loads_json(data: Union[str, Mapping]):
    """Parse the algebra file format; returns a pair if ``W`` is present.

    Raises ``ValueError`` on schema problems and :class:`AlgebraError` on
    axiom violations.
    """
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, Mapping) or "dim" not in data:
        raise ValueError("algebra file must be an object with a 'dim' field")
    n = data["dim"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("'dim' must be a positive integer")
    table = {}
    for key, coords in (data.get("mul") or {}).items():
        try:
            i, j = (int(x) for x in key.split(","))
        except ValueError:
            raise ValueError(f"bad product key {key!r}; expected 'i,j'") from None
        if i > j:
            raise ValueError(f"product key {key!r} must have i <= j")
        table[(i, j)] = _parse_vector(coords, n, f"product {key}")
    algebra = LocalAlgebra(n, table, name=data.get("name"))
    if "W" not in data:
        return algebra
    W = [(ZERO,) + _parse_vector(w, n - 1, "W vector") for w in data["W"]]
    if "complement" not in data:
        raise ValueError("a file with 'W' must also give 'complement'")
    c = (ZERO,) + _parse_vector(data["complement"], n - 1, "complement")
    return PointedPair(algebra, tuple(W), c, name=data.get("name"))


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        return loads_json(json.load(fh))


def dump_json(obj) -> dict:
    """Inverse of :func:`loads_json` (as a JSON-ready dict)."""
    A = obj.algebra if isinstance(obj, PointedPair) else obj
    out: dict = {"dim": A.dim}
    if A.name:
        out["name"] = A.name
    out["mul"] = {
        f"{i},{j}": [render_scalar(x) for x in v] for (i, j), v in sorted(A.products().items())
    }
    if isinstance(obj, PointedPair):
        out["W"] = [[render_scalar(x) for x in w[1:]] for w in obj.W]
        out["complement"] = [render_scalar(x) for x in obj.complement[1:]]
    return out
