"""Exact linear algebra over Q(i).

Two representations live here:

* plain nested lists / tuples of :class:`Scalar` for elimination work
  (``rref``, ``nullspace``, ``inverse``) and the :class:`Subspace` type;
* :class:`QMat`, a matrix stored as Gaussian-integer entries over one common
  denominator, whose products go through the compiled kernel.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import _kernels
from .scalar import ONE, ZERO, Scalar, as_scalar

Vector = tuple  # tuple of Scalar
Rows = list  # list of Vector


def vec(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def dot(u: Vector, v: Vector) -> Scalar:
    total = ZERO
    for a, b in zip(u, v):
        if a and b:
            total = total + a * b
    return total


def is_zero_vec(u: Vector) -> bool:
    return not any(u)


def identity(n: int) -> Rows:
    return [unit_vec(n, i) for i in range(n)]


def transpose(a: Sequence[Sequence[Scalar]]) -> Rows:
    return [tuple(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Rows:
    """Product of Scalar matrices; goes through :class:`QMat` for speed."""
    return (QMat.from_rows(a) @ QMat.from_rows(b)).to_rows()


def matvec(a: Sequence[Sequence[Scalar]], v: Vector) -> Vector:
    return tuple(dot(row, v) for row in a)


def rref(rows: Sequence[Sequence[Scalar]], ncols: Optional[int] = None):
    """Reduced row-echelon form.

    Returns ``(rows, pivots)`` with zero rows dropped; pivot entries are 1.
    """
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        if inv != ONE:
            m[r] = [x * inv if x else x for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[1])


def nullspace(a: Sequence[Sequence[Scalar]], ncols: Optional[int] = None) -> Rows:
    """Basis of ``{x : a x = 0}``, one vector per free column, in RREF order."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence[Scalar]], b: Vector) -> Optional[Vector]:
    """One solution of ``a x = b`` or None when inconsistent."""
    ncols = len(a[0])
    aug = [tuple(row) + (bi,) for row, bi in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return tuple(x)


def inverse(a: Sequence[Sequence[Scalar]]) -> Rows:
    n = len(a)
    aug = [tuple(row) + unit_vec(n, i) for i, row in enumerate(a)]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def det(a: Sequence[Sequence[Scalar]]) -> Scalar:
    m = [list(r) for r in a]
    n = len(m)
    result = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        p = m[c][c]
        result = result * p
        inv = p.inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


class Subspace:
    """A subspace of Q(i)^n held by its reduced row-echelon basis.

    Two subspaces are equal exactly when their bases are equal.
    """

    __slots__ = ("n", "basis", "pivots")

    def __init__(self, n: int, vectors: Iterable[Sequence[Scalar]] = ()):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
        basis, pivots = rref(vectors, n) if vectors else ([], [])
        self.n = n
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.reduce(v) is None

    def reduce(self, v: Sequence[Scalar]) -> Optional[Vector]:
        """Residue of ``v`` after clearing pivot columns; None if in span."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            if v[p]:
                f = v[p]
                v = [x - f * y if y else x for x, y in zip(v, row)]
        return None if not any(v) else tuple(v)

    def coordinates(self, v: Sequence[Scalar]) -> Vector:
        """Coefficients of ``v`` in :attr:`basis`; raises if ``v`` is outside."""
        if not self.contains(v):
            raise ValueError("vector not in subspace")
        return tuple(v[p] for p in self.pivots)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.n, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.is_zero() or other.is_zero():
            return Subspace(self.n)
        # x = sum a_r u_r = sum b_s v_s
        k = len(self.basis)
        cols = list(self.basis) + [vscale(-1, v) for v in other.basis]
        sols = nullspace(transpose(cols), len(cols))
        vecs = []
        for s in sols:
            x = zero_vec(self.n)
            for coef, u in zip(s[:k], self.basis):
                if coef:
                    x = vadd(x, vscale(coef, u))
            vecs.append(x)
        return Subspace(self.n, vecs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.basis)
        return f"Subspace(n={self.n}, basis=[{rows}])"


def _lcm_den(values: Iterable[Scalar]) -> int:
    d = 1
    for s in values:
        if s.re.denominator != 1:
            d = math.lcm(d, s.re.denominator)
        if s.im.denominator != 1:
            d = math.lcm(d, s.im.denominator)
    return d


class QMat:
    """Exact matrix over Q(i): ``(re + i*im) / den`` with integer entries.

    The representation is normalized (``den > 0`` and the content of all
    entries together with ``den`` is 1), so ``==`` is structural.
    """

    __slots__ = ("rows", "cols", "re", "im", "den")

    def __init__(self, rows: int, cols: int, re: list, im: list, den: int = 1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.rows = rows
        self.cols = cols
        g = _kernels.content_gcd(re, im, den)
        if g != 1:
            re = [x // g for x in re]
            im = [x // g for x in im]
            den //= g
        self.re = re
        self.im = im
        self.den = den

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMat":
        rows = [[as_scalar(x) for x in r] for r in rows]
        n = len(rows)
        m = len(rows[0]) if n else 0
        flat = [x for r in rows for x in r]
        d = _lcm_den(flat)
        re = [int(x.re * d) for x in flat]
        im = [int(x.im * d) for x in flat]
        return cls(n, m, re, im, d)

    @classmethod
    def identity(cls, n: int) -> "QMat":
        re = [1 if i == j else 0 for i in range(n) for j in range(n)]
        return cls(n, n, re, [0] * (n * n), 1)

    @classmethod
    def zeros(cls, n: int, m: Optional[int] = None) -> "QMat":
        m = n if m is None else m
        return cls(n, m, [0] * (n * m), [0] * (n * m), 1)

    @classmethod
    def column(cls, v: Sequence) -> "QMat":
        return cls.from_rows([[x] for x in v])

    def __getitem__(self, idx) -> Scalar:
        r, c = idx
        j = r * self.cols + c
        return Scalar(Fraction(self.re[j], self.den), Fraction(self.im[j], self.den))

    def to_rows(self) -> Rows:
        return [tuple(self[r, c] for c in range(self.cols)) for r in range(self.rows)]

    def column_vector(self, c: int = 0) -> Vector:
        return tuple(self[r, c] for r in range(self.rows))

    def transpose(self) -> "QMat":
        n, m = self.rows, self.cols
        idx = [r * m + c for c in range(m) for r in range(n)]
        return QMat(m, n, [self.re[j] for j in idx], [self.im[j] for j in idx], self.den)

    def __matmul__(self, other: "QMat") -> "QMat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cr, ci = _kernels.gauss_matmul(
            self.re, self.im, other.re, other.im, self.rows, self.cols, other.cols
        )
        return QMat(self.rows, other.cols, cr, ci, self.den * other.den)

    def _align(self, other: "QMat"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        d = math.lcm(self.den, other.den)
        fa, fb = d // self.den, d // other.den
        return d, fa, fb

    def __add__(self, other: "QMat") -> "QMat":
        d, fa, fb = self._align(other)
        re = [x * fa + y * fb for x, y in zip(self.re, other.re)]
        im = [x * fa + y * fb for x, y in zip(self.im, other.im)]
        return QMat(self.rows, self.cols, re, im, d)

    def __sub__(self, other: "QMat") -> "QMat":
        d, fa, fb = self._align(other)
        re = [x * fa - y * fb for x, y in zip(self.re, other.re)]
        im = [x * fa - y * fb for x, y in zip(self.im, other.im)]
        return QMat(self.rows, self.cols, re, im, d)

    def scale(self, c) -> "QMat":
        c = as_scalar(c)
        p, q, d = _split(c)
        re = [x * p - y * q for x, y in zip(self.re, self.im)]
        im = [x * q + y * p for x, y in zip(self.re, self.im)]
        return QMat(self.rows, self.cols, re, im, self.den * d)

    def __pow__(self, k: int) -> "QMat":
        if self.rows != self.cols or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result, base = QMat.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.re) and not any(self.im)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == QMat.identity(self.rows)

    def trace(self) -> Scalar:
        total = ZERO
        for i in range(min(self.rows, self.cols)):
            total = total + self[i, i]
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMat):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.den == other.den
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.den, tuple(self.re), tuple(self.im)))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.to_rows())
        return f"QMat([{body}])"


def _split(c: Scalar):
    d = math.lcm(c.re.denominator, c.im.denominator)
    return int(c.re * d), int(c.im * d), d
