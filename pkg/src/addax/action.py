"""The additive group action attached to a pointed pair.

``rho(a)`` is the operator of multiplication by ``exp(a_1 w_1 + ... +
a_n w_n)`` on the algebra, written as a matrix in the standard basis.  Its
products run through the compiled kernel (see :mod:`addax._kernels`).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .algebra import LocalAlgebra, PointedPair
from .linalg import QMat, Vector, vadd, vec, vscale
from .poly import Poly, parse_poly, x_names
from .scalar import ONE, Scalar, random_scalar

__all__ = [
    "exp_element",
    "rho",
    "ProjPoint",
    "act",
    "orbit_point",
    "derivation_check",
    "verify_action_invariance",
    "InvarianceCheck",
    "singular_at",
    "symbolic_action",
    "format_action",
    "parse_action",
    "action_names",
]


def exp_element(algebra: LocalAlgebra, a: Sequence) -> Vector:
    """``sum_k a^k / k!`` for ``a`` in the maximal ideal (a finite sum)."""
    a = vec(a)
    if len(a) != algebra.dim:
        raise ValueError("element has the wrong dimension")
    if a[0]:
        raise ValueError("exp is only defined on the maximal ideal here")
    total = algebra.one()
    term = algebra.one()
    for k in range(1, algebra.dim):
        term = algebra.multiply(term, a)
        if not any(term):
            break
        total = vadd(total, vscale(Scalar(Fraction(1, factorial(k))), term))
    return total


def rho(pair: PointedPair, coords: Sequence) -> QMat:
    """Matrix of ``v -> exp(sum a_i w_i) * v``; ``coords`` are W-coordinates."""
    a = pair.w_element(coords)
    e = exp_element(pair.algebra, a)
    return QMat.from_rows(pair.algebra.mult_matrix(e))


class ProjPoint:
    """A point of projective space, normalized so the first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        c = vec(coords)
        lead = next((x for x in c if x), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        if lead != ONE:
            inv = lead.inverse()
            c = tuple(x * inv for x in c)
        self.coords = c

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __len__(self):
        return len(self.coords)

    def __repr__(self) -> str:
        return "[" + ":".join(str(x) for x in self.coords) + "]"


def act(M: QMat, p: ProjPoint) -> ProjPoint:
    image = (M @ QMat.column(p.coords)).column_vector()
    if not any(image):
        raise ArithmeticError("matrix sent a point to zero; it is not invertible")
    return ProjPoint(image)


def orbit_point(pair: PointedPair, coords: Sequence) -> ProjPoint:
    """Image of ``[1:0:...:0]`` under ``rho(coords)``."""
    return act(rho(pair, coords), ProjPoint(pair.algebra.one()))


def derivation_check(pair: PointedPair, f: Poly):
    """Symbolic invariance test.

    For each W-basis element ``a`` the vector field ``x -> a*x`` must kill
    ``f``.  Returns ``None`` on success, otherwise ``(index of a, D_a f)``.
    """
    A = pair.algebra
    n = A.dim
    if f.nvars != n:
        raise ValueError("polynomial has the wrong number of variables")
    partials = [f.diff(j) for j in range(n)]
    for ai, w in enumerate(pair.W):
        L = A.mult_matrix(w)
        total = Poly(f.names)
        for j in range(n):
            if partials[j].is_zero():
                continue
            field = Poly.linear(f.names, L[j])
            if field:
                total = total + field * partials[j]
        if total:
            return ai, total
    return None


@dataclass(frozen=True)
class InvarianceCheck:
    symbolic: bool
    numeric: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.symbolic and self.numeric


def verify_action_invariance(pair: PointedPair, f: Poly, trials: int = 20,
                             rng: Optional[random.Random] = None) -> InvarianceCheck:
    """Check ``f(rho(a) v) = f(v)`` symbolically and on random samples."""
    rng = rng or random.Random(0)
    sym = derivation_check(pair, f)
    witness = None if sym is None else ("derivation", sym[0], str(sym[1]))
    numeric_ok = True
    n = pair.dim
    for _ in range(trials):
        a = [random_scalar(rng) for _ in range(pair.n)]
        v = [random_scalar(rng) for _ in range(n)]
        image = (rho(pair, a) @ QMat.column(v)).column_vector()
        if f.evaluate(image) != f.evaluate(v):
            numeric_ok = False
            if witness is None:
                witness = ("sample", tuple(map(str, a)), tuple(map(str, v)))
            break
    return InvarianceCheck(sym is None, numeric_ok, witness)


def singular_at(f: Poly, p) -> bool:
    """Whether the hypersurface ``f = 0`` is singular at the point ``p``."""
    coords = p.coords if isinstance(p, ProjPoint) else vec(p)
    if f.evaluate(coords):
        raise ValueError("point does not lie on the hypersurface")
    return all(not f.diff(j).evaluate(coords) for j in range(f.nvars))


# -- symbolic formulas ----------------------------------------------------------
def action_names(pair: PointedPair) -> tuple:
    """Variables ``a1..an`` followed by ``x0..x{N-1}``."""
    return x_names(pair.n, "a", 1) + x_names(pair.dim)


def _generic_multiply(A: LocalAlgebra, u, v, zero):
    n = A.dim
    acc = [zero] * n
    for i in range(n):
        if not u[i]:
            continue
        for j in range(n):
            if not v[j]:
                continue
            prod = A.basis_product(i, j)
            c = None
            for k, t in enumerate(prod):
                if t:
                    if c is None:
                        c = u[i] * v[j]
                    acc[k] = acc[k] + c * t
    return acc


def symbolic_action(pair: PointedPair) -> list:
    """Coordinates of ``rho(a) x`` as polynomials in ``a1..an, x0..x{N-1}``."""
    A = pair.algebra
    n = A.dim
    names = action_names(pair)
    zero = Poly(names)
    a_vars = [Poly.variable(names, i) for i in range(pair.n)]
    x_vars = [Poly.variable(names, pair.n + k) for k in range(n)]
    a_elem = [zero] * n
    for ai, w in zip(a_vars, pair.W):
        for k, c in enumerate(w):
            if c:
                a_elem[k] = a_elem[k] + ai * c
    total = [Poly.constant(names, ONE)] + [zero] * (n - 1)
    term = list(total)
    for k in range(1, n):
        term = _generic_multiply(A, term, a_elem, zero)
        if not any(term):
            break
        inv = Scalar(Fraction(1, factorial(k)))
        total = [t + s * inv for t, s in zip(total, term)]
    return _generic_multiply(A, total, x_vars, zero)


def _split_by_x(p: Poly, n_a: int, a_names) -> dict:
    """``{k: coefficient polynomial in the a's}`` for a polynomial linear in x."""
    out: dict = {}
    for e, c in p.terms.items():
        xs = e[n_a:]
        if sum(xs) != 1:
            raise ValueError("action coordinate is not linear in x")
        k = xs.index(1)
        out.setdefault(k, {})[e[:n_a]] = c
    return {k: Poly(a_names, t) for k, t in out.items()}


def _coordinate_text(j: int, p: Poly, n_a: int, names) -> str:
    a_names = names[:n_a]
    parts = _split_by_x(p, n_a, a_names)
    order = ([j] if j in parts else []) + sorted(k for k in parts if k != j)
    pieces = []
    for k in order:
        coef = parts[k]
        xk = names[n_a + k]
        if len(coef.terms) == 1:
            text = str(coef).replace(" ", "")
            neg = text.startswith("-")
            if neg:
                text = text[1:]
            body = xk if text == "1" else f"{text}*{xk}"
            pieces.append(("-" if neg else "+", body))
        else:
            pieces.append(("+", f"({str(coef).replace(' ', '')})*{xk}"))
    if not pieces:
        return "0"
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f"{sign}{body}"
    return out


def format_action(coords: Sequence[Poly], n_a: int) -> str:
    """Bracketed projective formula, e.g. ``[x0 : x1+a1*x0 : ...]``.

    Within each coordinate the ``x_j`` term comes first, then the other
    ``x_k`` in increasing order; coefficients are polynomials in the a's.
    """
    names = coords[0].names
    return "[" + " : ".join(
        _coordinate_text(j, p, n_a, names) for j, p in enumerate(coords)
    ) + "]"


def parse_action(text: str, names: Sequence[str]) -> list:
    """Parse ``[expr : expr : ...]`` into polynomials over ``names``."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError("action text must be enclosed in brackets")
    return [parse_poly(part, names) for part in body[1:-1].split(":")]
