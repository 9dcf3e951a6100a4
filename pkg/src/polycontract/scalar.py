"""Exact arithmetic in a real quadratic field Q(sqrt(d)).

A :class:`Scalar` holds ``a + b*sqrt(d)`` with rational ``a`` and ``b``
(arbitrary precision, via :class:`fractions.Fraction`).  Purely rational
values always carry ``d = 1`` so that equality and hashing coincide with
equality of the represented real numbers.  Values with radical parts over
different ``d`` cannot be mixed; rationals combine with anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from .errors import DivisionByZero, IncompatibleFields, ParseError

__all__ = [
    "FieldSpec",
    "Scalar",
    "ScalarLike",
    "as_scalar",
    "common_field",
    "format_scalar",
    "parse_scalar",
    "sqrt",
    "squarefree_part",
]

ScalarLike = Union["Scalar", int, Fraction]


def squarefree_part(n: int) -> tuple[int, int]:
    """Split ``n >= 1`` as ``s**2 * r`` with ``r`` square-free; return ``(s, r)``."""
    if n < 1:
        raise ValueError(f"radicand must be positive, got {n}")
    s, r = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            r *= p
        p += 1
    return s, r * n


@dataclass(frozen=True)
class FieldSpec:
    """The field Q(sqrt(d)); ``d = 1`` denotes the rationals."""

    d: int = 1

    def __post_init__(self) -> None:
        if self.d < 1 or squarefree_part(self.d)[0] != 1:
            raise ValueError(f"field parameter must be square-free and >= 1, got {self.d}")

    @property
    def is_rational(self) -> bool:
        return self.d == 1


def _new(a: Fraction, b: Fraction, d: int) -> Scalar:
    # Trusted constructor: d is square-free, and d == 1 implies b == 0.
    obj = object.__new__(Scalar)
    if not b:
        d = 1
    obj._a = a
    obj._b = b
    obj._d = d
    return obj


def _frac_sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class Scalar:
    """An immutable element ``a + b*sqrt(d)`` of a real quadratic field."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: int | Fraction | str = 0, b: int | Fraction | str = 0, d: int = 1) -> None:
        a = Fraction(a)
        b = Fraction(b)
        if d < 1:
            raise ValueError(f"field parameter must be >= 1, got {d}")
        s, d = squarefree_part(d)
        b *= s
        if d == 1:
            a, b = a + b, Fraction(0)
        if not b:
            d = 1
        self._a = a
        self._b = b
        self._d = d

    # -- accessors ---------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @property
    def field(self) -> FieldSpec:
        return FieldSpec(self._d)

    def is_rational(self) -> bool:
        return not self._b

    def conjugate(self) -> Scalar:
        return _new(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - b**2 * d``."""
        return self._a * self._a - self._b * self._b * self._d

    # -- arithmetic --------------------------------------------------------
    def _join(self, other: Scalar) -> int:
        if not other._b:
            return self._d
        if not self._b or self._d == other._d:
            return other._d
        raise IncompatibleFields(f"cannot combine sqrt({self._d}) with sqrt({other._d})")

    def __add__(self, other: ScalarLike) -> Scalar:
        other = as_scalar(other)
        d = self._join(other)
        return _new(self._a + other._a, self._b + other._b, d)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Scalar:
        other = as_scalar(other)
        d = self._join(other)
        return _new(self._a - other._a, self._b - other._b, d)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        return as_scalar(other) - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        other = as_scalar(other)
        d = self._join(other)
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if not b1 and not b2:
            return _new(a1 * a2, b1, 1)
        return _new(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> Scalar:
        other = as_scalar(other)
        d = self._join(other)
        if not other._b:
            if not other._a:
                raise DivisionByZero("division by zero")
            return _new(self._a / other._a, self._b / other._a, d)
        n = other.norm()
        a1, b1, a2, b2 = self._a, self._b, other._a, -other._b
        return _new((a1 * a2 + b1 * b2 * d) / n, (a1 * b2 + a2 * b1) / n, d)

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        return as_scalar(other) / self

    def __neg__(self) -> Scalar:
        return _new(-self._a, -self._b, self._d)

    def __pos__(self) -> Scalar:
        return self

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    # -- ordering ----------------------------------------------------------
    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)`` as -1, 0 or +1."""
        sa = _frac_sign(self._a)
        sb = _frac_sign(self._b)
        if sb == 0 or sa == sb:
            return sa
        if sa == 0:
            return sb
        # opposite signs: the term with the larger square dominates
        return sa if self._a * self._a > self._b * self._b * self._d else sb

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return not self._b and self._a == other
        return NotImplemented

    def __lt__(self, other: ScalarLike) -> bool:
        if not isinstance(other, (Scalar, int, Rational)):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if not self._b:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    # -- conversion --------------------------------------------------------
    def __float__(self) -> float:
        return float(self._a) + float(self._b) * self._d**0.5

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


def as_scalar(x: ScalarLike) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return _new(Fraction(x), Fraction(0), 1)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


def sqrt(n: int) -> Scalar:
    """Exact square root of a positive integer."""
    s, r = squarefree_part(n)
    if r == 1:
        return Scalar(s)
    return _new(Fraction(0), Fraction(s), r)


def common_field(values) -> FieldSpec:
    """The single field shared by ``values``; raises on mixed radicals."""
    d = 1
    for x in values:
        if x.d != 1:
            if d != 1 and d != x.d:
                raise IncompatibleFields(f"values mix sqrt({d}) and sqrt({x.d})")
            d = x.d
    return FieldSpec(d)


# -- literal grammar -------------------------------------------------------


def _format_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    """Canonical literal, e.g. ``1/2+1/2*sqrt(3)``, ``1-sqrt(2)``, ``-3/4``."""
    if not x.b:
        return _format_rat(x.a)
    mag = abs(x.b)
    rad = f"sqrt({x.d})" if mag == 1 else f"{_format_rat(mag)}*sqrt({x.d})"
    sign = "-" if x.b < 0 else "+"
    if not x.a:
        return rad if sign == "+" else "-" + rad
    return f"{_format_rat(x.a)}{sign}{rad}"


class _Reader:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def take(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def sign(self) -> int | None:
        if self.take("+"):
            return 1
        if self.take("-"):
            return -1
        return None

    def uint(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected digits")
        return int(self.text[start : self.pos])

    def rat(self) -> Fraction:
        num = self.uint()
        if self.take("/"):
            pos = self.pos
            den = self.uint()
            if den == 0:
                self.pos = pos
                self.fail("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def radical(self) -> int:
        # caller has consumed "sqrt("
        pos = self.pos
        n = self.uint()
        if n == 0:
            self.pos = pos
            self.fail("radicand must be positive")
        if not self.take(")"):
            self.fail("expected ')'")
        return n

    def term(self, sign: int) -> tuple[Fraction, Fraction, int]:
        """One of ``rat``, ``rat*sqrt(n)`` or ``sqrt(n)``; returns (a, b, n)."""
        if self.take("sqrt("):
            return Fraction(0), Fraction(sign), self.radical()
        q = sign * self.rat()
        if self.take("*"):
            if not self.take("sqrt("):
                self.fail("expected 'sqrt('")
            return Fraction(0), q, self.radical()
        return q, Fraction(0), 1


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal such as ``"1/2+1/2*sqrt(3)"`` or ``"-1"``.

    A unit radical coefficient may be omitted (``"1-sqrt(2)"``) so that
    every canonical literal produced by :func:`format_scalar` parses back.
    """
    r = _Reader(text.strip())
    if r.at_end():
        r.fail("empty literal")
    s = r.sign() or 1
    a, b, n = r.term(s)
    if not r.at_end():
        if b:
            r.fail("radical term must come last")
        s2 = r.sign()
        if s2 is None:
            r.fail("expected '+' or '-'")
        if r.at_end() or r.peek("+") or r.peek("-"):
            r.fail("expected a term")
        pos = r.pos
        _, b, n = r.term(s2)
        if not b and n == 1:
            r.pos = pos
            r.fail("second term must be a radical")
    if not r.at_end():
        r.fail("unexpected trailing characters")
    return Scalar(a, b, n)
