"""Sparse multivariate polynomials over Q(i) and their text format.

Terms are printed in descending lexicographic order of exponent vectors
(the first variable is most significant), e.g. ``x0*x2 - 1/2*x1^2``.  The
same module parses that format back, together with ordinary arithmetic
expressions (``+ - * /``, ``^``, parentheses) so hand-written formulas can
be compared after canonical formatting.
"""

from __future__ import annotations

import re
from math import factorial
from typing import Iterable, Mapping, Optional, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar, render_scalar

__all__ = [
    "Poly",
    "HomPoly",
    "x_names",
    "parse_poly",
    "format_coefficient",
]


def x_names(n: int, prefix: str = "x", start: int = 0) -> tuple:
    return tuple(f"{prefix}{i}" for i in range(start, start + n))


class Poly:
    """Polynomial in ``len(names)`` variables: ``{exponent tuple: Scalar}``.

    Zero coefficients are never stored.
    """

    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Optional[Mapping] = None):
        self.names = tuple(names)
        n = len(self.names)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not match {n} variables")
            c = as_scalar(c)
            if c:
                clean[exps] = clean.get(exps, ZERO) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    # -- constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, names, c) -> "Poly":
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def variable(cls, names, idx: int) -> "Poly":
        names = tuple(names)
        return cls(names, {tuple(1 if j == idx else 0 for j in range(len(names))): ONE})

    @classmethod
    def linear(cls, names, coeffs: Sequence) -> "Poly":
        n = len(names)
        return cls(names, {
            tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)
        })

    @property
    def nvars(self) -> int:
        return len(self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coeff(self, exps) -> Scalar:
        return self.terms.get(tuple(exps), ZERO)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def leading(self):
        """Leading ``(exps, coeff)`` in the lexicographic order, or None."""
        if not self.terms:
            return None
        e = max(self.terms)
        return e, self.terms[e]

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, ZERO)

    # -- arithmetic -------------------------------------------------------------
    def _check(self, other: "Poly"):
        if self.names != other.names:
            raise ValueError(f"variable mismatch {self.names} vs {other.names}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(self.names, other)

    def __add__(self, other) -> "Poly":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return Poly(self.names, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Poly":
        return self._lift(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = as_scalar(other)
            return Poly(self.names, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return Poly(self.names, out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if set(other.terms) - {(0,) * other.nvars}:
                raise ValueError("can only divide by a constant")
            other = other.constant_term()
        return self * as_scalar(other).inverse()

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(self.names, ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.names == other.names and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == Poly.constant(self.names, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    # -- calculus / evaluation -----------------------------------------------
    def diff(self, idx: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[idx]
            if k:
                ne = list(e)
                ne[idx] = k - 1
                out[tuple(ne)] = c * k
        return Poly(self.names, out)

    def evaluate(self, point: Sequence) -> Scalar:
        point = [as_scalar(p) for p in point]
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        total = ZERO
        cache: dict = {}
        for e, c in self.terms.items():
            val = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = point[i] ** k
                    val = val * cache[key]
                    if not val:
                        break
            total = total + val
        return total

    def substitute(self, values: Sequence["Poly"]) -> "Poly":
        """Compose: replace variable ``i`` by the polynomial ``values[i]``."""
        if len(values) != self.nvars:
            raise ValueError("need one value per variable")
        names = values[0].names if values else ()
        total = Poly(names)
        for e, c in self.terms.items():
            term = Poly.constant(names, c)
            for i, k in enumerate(e):
                if k:
                    term = term * values[i] ** k
            total = total + term
        return total

    def rename(self, names: Sequence[str]) -> "Poly":
        return Poly(names, self.terms)

    def embed(self, names: Sequence[str]) -> "Poly":
        """Re-express in a larger variable set containing all current names."""
        names = tuple(names)
        idx = [names.index(v) for v in self.names]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(names)
            for j, k in zip(idx, e):
                ne[j] = k
            out[tuple(ne)] = c
        return Poly(names, out)

    def variables_used(self) -> set:
        return {self.names[i] for e in self.terms for i, k in enumerate(e) if k}

    # -- text -------------------------------------------------------------------
    def monomial_text(self, exps) -> str:
        parts = []
        for name, k in zip(self.names, exps):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = self.monomial_text(e)
            sign, text = format_coefficient(c, bool(mono))
            out.append((sign, text + mono))
        first_sign, first = out[0]
        s = ("-" if first_sign < 0 else "") + first
        for sign, text in out[1:]:
            s += (" - " if sign < 0 else " + ") + text
        return s

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, names={self.names})"


def format_coefficient(c: Scalar, has_monomial: bool) -> tuple:
    """``(sign, text)`` where text already ends with ``*`` if needed."""
    if c.is_real():
        sign = -1 if c.re < 0 else 1
        mag = abs(c.re)
        if has_monomial:
            return sign, ("" if mag == 1 else f"{mag}*")
        return sign, str(mag)
    text = f"({render_scalar(c)})"
    return 1, (text + "*" if has_monomial else text)


class HomPoly(Poly):
    """Homogeneous polynomial of fixed degree in variables ``x0..x{N-1}``."""

    __slots__ = ("degree",)

    def __init__(self, n_vars: int, degree: int, terms: Optional[Mapping] = None,
                 names: Optional[Sequence[str]] = None):
        super().__init__(names or x_names(n_vars), terms)
        for e in self.terms:
            if sum(e) != degree:
                raise ValueError(f"term {e} is not of degree {degree}")
        self.degree = degree

    @classmethod
    def from_poly(cls, p: Poly, degree: Optional[int] = None) -> "HomPoly":
        if degree is None:
            degree = p.total_degree()
            if degree < 0:
                raise ValueError("the zero polynomial has no degree; pass it explicitly")
        return cls(p.nvars, degree, p.terms, names=p.names)

    @property
    def n_vars(self) -> int:
        return self.nvars

    def normalized(self) -> "HomPoly":
        """Scaled so the lexicographically leading coefficient is 1."""
        lead = self.leading()
        if lead is None:
            return self
        return HomPoly.from_poly(self * lead[1].inverse(), self.degree)

    def __mul__(self, other):
        out = Poly.__mul__(self, other)
        if isinstance(other, Poly):
            return HomPoly.from_poly(out, self.degree + other.total_degree()) if out else out
        return HomPoly.from_poly(out, self.degree)

    __rmul__ = __mul__


# -- parsing ----------------------------------------------------------------
_TOKEN = re.compile(
    r"\s*(?:(?P<num>[0-9]+(?:/[0-9]+)?)(?P<imag>i(?![A-Za-z0-9_]))?"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        if m["num"] is not None:
            prev = tokens[-1] if tokens else None
            if prev == ("op", "^"):
                # exponents are plain integers
                head = m["num"].split("/")[0]
                tokens.append(("int", int(head)))
                if "/" in m["num"]:
                    tokens.append(("op", "/"))
                    tokens.append(("num", as_scalar(m["num"].split("/")[1])))
                if m["imag"]:
                    raise ValueError("imaginary exponent")
                continue
            val = as_scalar(m["num"])
            if m["imag"]:
                val = val * Scalar(0, 1)
            tokens.append(("num", val))
        elif m["name"] is not None:
            tokens.append(("name", m["name"]))
        else:
            tokens.append(("op", m["op"]))
    return tokens


class _Parser:
    def __init__(self, tokens, names):
        self.toks = tokens
        self.pos = 0
        self.names = tuple(names)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ValueError(f"expected {op!r}, got {tok!r}")

    def expr(self) -> Poly:
        sign = 1
        tok = self.peek()
        if tok in (("op", "+"), ("op", "-")):
            self.take()
            sign = -1 if tok[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Poly:
        value = self.power()
        while True:
            tok = self.peek()
            if tok == ("op", "*"):
                self.take()
                value = value * self.power()
            elif tok == ("op", "/"):
                self.take()
                value = value / self.power()
            elif tok is not None and tok[0] in ("num", "name") or tok == ("op", "("):
                value = value * self.power()  # implicit multiplication
            else:
                return value

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            tok = self.take()
            if tok is None or tok[0] != "int":
                raise ValueError("exponent must be a non-negative integer")
            base = base ** tok[1]
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of expression")
        kind, val = tok
        if kind == "num":
            return Poly.constant(self.names, val)
        if kind == "name":
            if val == "i":
                return Poly.constant(self.names, Scalar(0, 1))
            if val not in self.names:
                raise ValueError(f"unknown variable {val!r}")
            return Poly.variable(self.names, self.names.index(val))
        if tok == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        if tok == ("op", "-"):
            return -self.power()
        raise ValueError(f"unexpected token {tok!r}")


def parse_poly(text: str, names: Sequence[str]) -> Poly:
    """Parse a polynomial expression in the given variables."""
    parser = _Parser(_tokenize(text), names)
    value = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input at token {parser.peek()!r}")
    return value


def multinomial(exps: Iterable[int]) -> int:
    exps = list(exps)
    out = factorial(sum(exps))
    for k in exps:
        out //= factorial(k)
    return out
