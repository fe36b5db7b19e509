"""Exact arithmetic in Q(sqrt(d)) for a positive non-square rational d.

Half-integral powers of the residue cardinality q show up in modulus
characters, so we need q**(1/2) exactly.  Elements are a + b*sqrt(d);
anything with b == 0 collapses back to a plain Fraction.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .guard import check_bits


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class QuadExt:
    """a + b*sqrt(d), immutable and hashable."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        d = _frac(d)
        if d <= 0 or _rational_sqrt(d) is not None:
            raise ValueError(f"radicand must be a positive non-square, got {d}")
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @staticmethod
    def make(a, b, d):
        """Build a + b*sqrt(d), returning a Fraction when b vanishes."""
        a, b = _frac(a), _frac(b)
        if b == 0:
            return a
        return QuadExt(a, b, d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError("mixing different quadratic extensions")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt.make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt.make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt.make(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        out = QuadExt.make(self.a * a + self.b * b * self.d, self.a * b + self.b * a, self.d)
        check_bits(out)
        return out

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of a quadratic extension")
        return QuadExt.make(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if isinstance(other, QuadExt):
            return self * other.inverse()
        if c[0] == 0:
            raise ZeroDivisionError("division by zero")
        return QuadExt.make(self.a / c[0], self.b / c[0], self.d)

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self.inverse() * c[0]

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Fraction(1), self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __complex__(self):
        return complex(float(self))

    def __abs__(self):
        return abs(float(self))

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return f"{self.a}+{self.b}*sqrt({self.d})"


def sqrt_exact(x):
    """Square root of a positive rational inside Q or Q(sqrt(x))."""
    x = _frac(x)
    r = _rational_sqrt(x)
    if r is not None:
        return r
    return QuadExt(0, 1, x)


def half_power(q, m: int):
    """q**(m/2) exactly, for a positive rational q and integer m."""
    q = _frac(q)
    if q <= 0:
        raise ValueError("q must be positive")
    if m % 2 == 0:
        return q ** (m // 2)
    return q ** ((m - 1) // 2) * sqrt_exact(q)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, QuadExt))
