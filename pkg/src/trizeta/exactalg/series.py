"""Truncated power series in one variable, generic over the coefficient ring.

Coefficients may be Fractions, QuadExt elements, SparseLaurent polynomials
or complex floats; the code only uses +, -, * and (for inversion) division
by the constant term.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _zero_like(c):
    if isinstance(c, complex) or isinstance(c, float):
        return 0j if isinstance(c, complex) else 0.0
    z = c * 0
    return z


@dataclass(frozen=True)
class TruncatedSeries:
    variable: str
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(
            Fraction(c) if isinstance(c, int) and not isinstance(c, bool) else c for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int, variable: str = "T", zero=Fraction(0)):
        c = list(coeffs[:order + 1])
        c += [zero] * (order + 1 - len(c))
        return cls(variable, tuple(c))

    @classmethod
    def one(cls, order: int, variable: str = "T", one=Fraction(1)):
        return cls.from_coeffs([one], order, variable, zero=one * 0)

    @classmethod
    def geometric(cls, gamma, order: int, variable: str = "T"):
        """(1 - gamma T)^{-1} through the given order."""
        out, p = [], gamma ** 0 if not isinstance(gamma, int) else Fraction(1)
        for _ in range(order + 1):
            out.append(p)
            p = p * gamma
        return cls(variable, tuple(out))

    def __getitem__(self, n: int):
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} beyond order {self.order}")
        return self.coeffs[n]

    def _check(self, other: "TruncatedSeries") -> None:
        if other.variable != self.variable:
            raise ValueError(f"series variable mismatch {self.variable} vs {other.variable}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return TruncatedSeries(self.variable, tuple(c))
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries(self.variable, tuple(a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.variable, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other, min(self.order, other.order))
        return TruncatedSeries(self.variable, tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.variable, self.coeffs[:order + 1])

    def inverse(self) -> "TruncatedSeries":
        return series_inverse(self)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.variable != other.variable:
            return False
        n = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1]))

    def __hash__(self):
        return hash((self.variable, self.coeffs))

    def evaluate(self, t):
        acc = _zero_like(self.coeffs[0])
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def map(self, f) -> "TruncatedSeries":
        return TruncatedSeries(self.variable, tuple(f(c) for c in self.coeffs))


def series_mul(a: TruncatedSeries, b: TruncatedSeries, N: int) -> TruncatedSeries:
    if a.variable != b.variable:
        raise ValueError(f"series variable mismatch {a.variable} vs {b.variable}")
    if N > a.order or N > b.order:
        raise ValueError(f"operands only defined through order {min(a.order, b.order)}")
    out = []
    for n in range(N + 1):
        acc = None
        for k in range(n + 1):
            x, y = a.coeffs[k], b.coeffs[n - k]
            if isinstance(x, Fraction) and x == 0 or isinstance(y, Fraction) and y == 0:
                continue
            t = x * y
            acc = t if acc is None else acc + t
        out.append(acc if acc is not None else _zero_like(a.coeffs[0] * b.coeffs[0]))
    return TruncatedSeries(a.variable, tuple(out))


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    c0 = f.coeffs[0]
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = 1 / c0
    out = [inv0]
    for n in range(1, f.order + 1):
        acc = None
        for k in range(1, n + 1):
            t = f.coeffs[k] * out[n - k]
            acc = t if acc is None else acc + t
        out.append(-acc * inv0)
    return TruncatedSeries(f.variable, tuple(out))


def series_product(factors: Sequence[TruncatedSeries], N: int) -> TruncatedSeries:
    it = iter(factors)
    acc = next(it).truncate(N)
    for f in it:
        acc = series_mul(acc, f, N)
    return acc
