"""Exact arithmetic in the Gaussian rationals Q[i].

Rationals are plain :class:`fractions.Fraction` values; a
:class:`GaussianRational` is a pair of them.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_rational(text: Union[str, int]) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly.  Decimal and float literals are rejected."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text.replace(" ", ""))
    return value


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coerce(x) -> "GaussianRational":
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (_RationalABC,)):
        return GaussianRational(Fraction(x), Fraction(0))
    if isinstance(x, complex):
        raise TypeError("floating complex values are not exact; build a GaussianRational")
    return NotImplemented


class GaussianRational:
    """An element ``re + im*i`` of Q[i].  Immutable and hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "re", parse_rational(re) if isinstance(re, str) else Fraction(re))
        object.__setattr__(self, "im", parse_rational(im) if isinstance(im, str) else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations -------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2`` (exact)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    # -- text -------------------------------------------------------------
    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)!r}, {format_rational(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        im = self.im
        if abs(im) == 1:
            imag = "i"
        else:
            imag = f"{format_rational(abs(im))}i"
        if self.re == 0:
            return ("-" if im < 0 else "") + imag
        return f"{format_rational(self.re)}{'-' if im < 0 else '+'}{imag}"

    def to_pair(self) -> tuple[str, str]:
        return format_rational(self.re), format_rational(self.im)

    @classmethod
    def from_pair(cls, pair: Sequence) -> "GaussianRational":
        if len(pair) != 2:
            raise ValueError(f"expected a (re, im) pair, got {pair!r}")
        return cls(parse_rational(pair[0]), parse_rational(pair[1]))


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def gr(value) -> GaussianRational:
    """Shorthand constructor: accepts an int, Fraction, (re, im) pair or GaussianRational."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, tuple):
        return GaussianRational(*value)
    return GaussianRational(value, 0)


def realify(v: Iterable[GaussianRational]) -> tuple[Fraction, ...]:
    """Interleave ``(re_1, im_1, re_2, im_2, ...)``; a C^m vector becomes an R^2m vector."""
    out: list[Fraction] = []
    for z in v:
        z = gr(z)
        out.append(z.re)
        out.append(z.im)
    return tuple(out)


def complexify(v: Sequence) -> tuple[GaussianRational, ...]:
    """Inverse of :func:`realify`."""
    if len(v) % 2:
        raise ValueError("realified vector must have even length")
    return tuple(GaussianRational(v[2 * k], v[2 * k + 1]) for k in range(len(v) // 2))


_GAUSS_RE = re.compile(
    r"^(?P<re>[+-]?\d+(?:/\d+)?)?(?:(?P<isign>[+-])?(?P<imag>\d+(?:/\d+)?)?i)?$"
)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``"a"``, ``"bi"``, ``"a+bi"``, ``"-i"``, ``"1/2-3/4i"`` exactly."""
    s = text.replace(" ", "")
    mt = _GAUSS_RE.match(s)
    if not s or mt is None or (mt.group("re") is None and not s.endswith("i")):
        raise ValueError(f"not a Gaussian rational literal: {text!r}")
    re_part = Fraction(mt.group("re")) if mt.group("re") else Fraction(0)
    if not s.endswith("i"):
        return GaussianRational(re_part, 0)
    if mt.group("re") is not None and mt.group("isign") is None:
        # "2i" is parsed as re="2" followed by "i"; treat it as purely imaginary
        return GaussianRational(0, re_part)
    mag = Fraction(mt.group("imag")) if mt.group("imag") else Fraction(1)
    return GaussianRational(re_part, -mag if mt.group("isign") == "-" else mag)
