"""Exact Gaussian rationals: the field Q(i).

Values are immutable and always normalized (both parts are ``Fraction``s in
lowest terms), so structural equality is value equality.

>>> Scalar(1, 2) * Scalar(1, -2)
Scalar(5)
>>> parse_scalar("-1/2+1/2i")
Scalar(-1/2, 1/2)
>>> render_scalar(Scalar(0, -1))
'0-i'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Optional, Union

__all__ = [
    "Scalar",
    "ScalarLike",
    "ZERO",
    "ONE",
    "I",
    "NotRepresentable",
    "as_scalar",
    "parse_scalar",
    "render_scalar",
    "sqrt_in_field",
    "kth_roots",
    "rational_sqrt",
]

ScalarLike = Union["Scalar", int, Fraction, str]


class NotRepresentable(ArithmeticError):
    """Raised when an exact answer would leave the field Q(i)."""


class Scalar:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        if not isinstance(re, Fraction):
            re = Fraction(re)
        if not isinstance(im, Fraction):
            im = Fraction(im)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return (Scalar, (self.re, self.im))

    # -- predicates ---------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return Scalar(a * c)
            return Scalar(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return Scalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __pos__(self) -> "Scalar":
        return self

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Scalar":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return Scalar(self.re / n, -self.im / n)

    def conj(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm ``re^2 + im^2``."""
        return self.re * self.re + self.im * self.im

    def __repr__(self) -> str:
        if not self.im:
            return f"Scalar({self.re})"
        return f"Scalar({self.re}, {self.im})"

    def __str__(self) -> str:
        return render_scalar(self)


def _coerce(x) -> Optional[Scalar]:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    if isinstance(x, Rational):
        return Scalar(Fraction(x.numerator, x.denominator))
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(x: ScalarLike) -> Scalar:
    """Coerce ints, Fractions and scalar text to a :class:`Scalar`."""
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")
    return s


# -- text format ------------------------------------------------------------
_RAT = r"[0-9]+(?:/[0-9]+)?"
_SCALAR_RE = re.compile(
    rf"^\s*(?P<re>[+-]?{_RAT})(?:(?P<sign>[+-])(?P<im>{_RAT})?i)?\s*$"
)
_IMAG_RE = re.compile(rf"^\s*(?P<sign>[+-]?)(?P<im>{_RAT})?i\s*$")


def _parse_rational(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> Scalar:
    """Parse ``rational ( ('+'|'-') rational? 'i' )?``.

    A bare imaginary such as ``i`` or ``-1/2i`` is also accepted.
    """
    m = _SCALAR_RE.match(text)
    if m:
        re_part = _parse_rational(m["re"])
        if m["sign"] is None:
            return Scalar(re_part)
        im_part = _parse_rational(m["im"]) if m["im"] else Fraction(1)
        return Scalar(re_part, -im_part if m["sign"] == "-" else im_part)
    m = _IMAG_RE.match(text)
    if m:
        im_part = _parse_rational(m["im"]) if m["im"] else Fraction(1)
        return Scalar(0, -im_part if m["sign"] == "-" else im_part)
    raise ValueError(f"malformed scalar text: {text!r}")


def render_scalar(x: Scalar) -> str:
    """Canonical text; ``parse_scalar(render_scalar(x)) == x``."""
    out = str(x.re)
    if x.im:
        mag = abs(x.im)
        out += ("-" if x.im < 0 else "+") + ("" if mag == 1 else str(mag)) + "i"
    return out


# -- roots ------------------------------------------------------------------
def rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact non-negative square root of a rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt_in_field(a: ScalarLike) -> Optional[Scalar]:
    """Square root in Q(i), or None when it does not exist.

    The branch is fixed: real part > 0, or real part 0 and imaginary part > 0.
    """
    a = as_scalar(a)
    if not a:
        return ZERO
    r = rational_sqrt(a.norm())
    if r is None:
        return None
    x = rational_sqrt((a.re + r) / 2)
    y = rational_sqrt((r - a.re) / 2)
    if x is None or y is None:
        return None
    if a.im < 0:
        y = -y
    s = Scalar(x, y)
    if not x and y < 0:
        s = -s
    assert s * s == a
    return s


def _gauss_int_parts(a: Scalar) -> tuple[int, int, int]:
    """Write ``a = (p + q i) / D`` with integers p, q and D > 0."""
    d = math.lcm(a.re.denominator, a.im.denominator)
    return int(a.re * d), int(a.im * d), d


def kth_roots(a: ScalarLike, k: int) -> list[Scalar]:
    """All ``s`` in Q(i) with ``s**k == a``, sorted deterministically.

    Any root has the form ``g / D`` with ``g`` a Gaussian integer when
    ``a = gamma / D``, so candidates are found by rounding the complex roots
    of ``gamma * D**(k-1)`` and then verified exactly.
    """
    if k < 1:
        raise ValueError("k must be positive")
    a = as_scalar(a)
    if not a:
        return [ZERO]
    if k == 1:
        return [a]
    import mpmath

    p, q, d = _gauss_int_parts(a)
    big = Scalar(p, q) * Scalar(d) ** (k - 1)
    gp, gq = int(big.re), int(big.im)
    digits = len(str(max(abs(gp), abs(gq)))) + 30
    found = set()
    with mpmath.workdps(digits):
        z = mpmath.mpc(gp, gq)
        mag = abs(z) ** (mpmath.mpf(1) / k)
        arg = mpmath.arg(z)
        for j in range(k):
            theta = (arg + 2 * mpmath.pi * j) / k
            x = int(mpmath.nint(mag * mpmath.cos(theta)))
            y = int(mpmath.nint(mag * mpmath.sin(theta)))
            cand = Scalar(Fraction(x, d), Fraction(y, d))
            if cand ** k == a:
                found.add(cand)
    return sorted(found, key=lambda s: (s.re, s.im))


def iter_small_scalars(rng, bound: int = 10, complex_: bool = True) -> Iterator[Scalar]:
    """Endless stream of random Gaussian rationals with small parts."""
    while True:
        re_ = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        im_ = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if complex_ else 0
        yield Scalar(re_, im_)


def random_scalar(rng, bound: int = 10, complex_: bool = True, nonzero: bool = False) -> Scalar:
    for s in iter_small_scalars(rng, bound, complex_):
        if s or not nonzero:
            return s
    raise AssertionError("unreachable")
