"""Exact arithmetic in Q(sqrt2, sqrt3).

Rational values are kept as plain ``int``/``Fraction`` so the common case
stays fast.  Only genuinely irrational values become :class:`QSqrt`, and any
arithmetic result whose irrational part vanishes collapses back to a
``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "QSqrt"]

_BASIS = ("1", "sqrt2", "sqrt3", "sqrt6")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class QSqrt:
    """a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _frac(a)
        self.b = _frac(b)
        self.c = _frac(c)
        self.d = _frac(d)

    @staticmethod
    def make(a, b, c, d) -> Scalar:
        if b == 0 and c == 0 and d == 0:
            a = _frac(a)
            return a.numerator if a.denominator == 1 else a
        return QSqrt(a, b, c, d)

    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    # arithmetic -------------------------------------------------------
    def __add__(self, o):
        o = lift(o)
        if o is None:
            return NotImplemented
        return QSqrt.make(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o):
        o = lift(o)
        if o is None:
            return NotImplemented
        return QSqrt.make(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (int, Fraction)):
            if o == 0:
                return 0
            return QSqrt(self.a * o, self.b * o, self.c * o, self.d * o)
        o = lift(o)
        if o is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        return QSqrt.make(
            a * e + 2 * b * f + 3 * c * g + 6 * d * h,
            a * f + b * e + 3 * (c * h + d * g),
            a * g + c * e + 2 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        # kill sqrt2 with its conjugate, then sqrt3 likewise
        c2 = QSqrt(self.a, -self.b, self.c, -self.d)
        y = lift(self * c2)
        c3 = QSqrt(y.a, 0, -y.c, 0)
        n = lift(y * c3)
        if n.b or n.c or n.d or n.a == 0:
            raise ZeroDivisionError("QSqrt inverse")
        return (c2 * c3) * (1 / n.a)

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return self * (Fraction(1) / o)
        o = lift(o)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return lift(self.inverse()) ** (-n)
        out: Scalar = 1
        for _ in range(n):
            out = out * self
        return out

    # comparison -------------------------------------------------------
    def __eq__(self, o):
        o = lift(o)
        if o is None:
            return NotImplemented
        return self.parts() == o.parts()

    def __hash__(self):
        # must agree with the hash of an equal rational
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash(self.parts())

    def __bool__(self):
        return any(self.parts())

    def __repr__(self):
        terms = []
        for coeff, name in zip(self.parts(), _BASIS):
            if coeff:
                terms.append(str(coeff) if name == "1" else f"{coeff}*{name}")
        return "(" + " + ".join(terms) + ")" if terms else "0"


def lift(x) -> QSqrt | None:
    if isinstance(x, QSqrt):
        return x
    if isinstance(x, (int, Fraction)):
        return QSqrt(x)
    return None


def normalize(x) -> Scalar:
    """Collapse a scalar to the cheapest exact representation."""
    if isinstance(x, QSqrt):
        return QSqrt.make(*x.parts())
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def sqrt(q: Rational) -> Scalar:
    """Square root of a non-negative rational, when it lies in the field."""
    q = _frac(q)
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return 0
    # sqrt(n/m) = sqrt(n*m)/m
    prod = q.numerator * q.denominator
    square, free = 1, 1
    p = 2
    rest = prod
    while p * p <= rest:
        while rest % (p * p) == 0:
            rest //= p * p
            square *= p
        if rest % p == 0:
            rest //= p
            free *= p
        p += 1
    free *= rest
    if isqrt(free) ** 2 == free:
        square *= isqrt(free)
        free = 1
    scale = Fraction(square, q.denominator)
    slot = {1: 0, 2: 1, 3: 2, 6: 3}.get(free)
    if slot is None:
        raise ValueError(f"sqrt({q}) is outside Q(sqrt2, sqrt3)")
    parts = [0, 0, 0, 0]
    parts[slot] = scale
    return QSqrt.make(*parts)


def to_json(x: Scalar) -> list[str]:
    return [str(p) for p in lift(x).parts()]


def from_json(v: list[str]) -> Scalar:
    return QSqrt.make(*(Fraction(s) for s in v))


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, QSqrt))
