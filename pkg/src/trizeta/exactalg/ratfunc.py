"""Rational functions as pairs of Laurent polynomials in a canonical form."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import SparseLaurent, poly_divmod
from .series import TruncatedSeries


@dataclass(frozen=True, eq=False)
class RationalFunction:
    numerator: SparseLaurent
    denominator: SparseLaurent

    def __post_init__(self):
        if self.numerator.variables != self.denominator.variables:
            raise ValueError("numerator and denominator use different variables")
        if self.denominator.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    @property
    def variables(self) -> tuple:
        return self.numerator.variables

    @classmethod
    def from_laurent(cls, p: SparseLaurent) -> "RationalFunction":
        return rf_normalize(cls(p, SparseLaurent.constant(p.variables, 1)))

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return rf_normalize(RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator))

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return rf_normalize(RationalFunction(self.numerator * other.numerator,
                                                 self.denominator * other.denominator))
        return rf_normalize(RationalFunction(self.numerator * other, self.denominator))

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.numerator.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return rf_normalize(RationalFunction(self.numerator * other.denominator,
                                             self.denominator * other.numerator))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __hash__(self):
        f = rf_normalize(self)
        return hash((f.numerator, f.denominator))

    def is_laurent(self) -> bool:
        """True when the normalized denominator is a single monomial."""
        return rf_normalize(self).denominator.is_monomial()

    def to_series(self, order: int) -> TruncatedSeries:
        """Expand a univariate function around 0 (denominator(0) must be nonzero)."""
        if len(self.variables) != 1:
            raise ValueError("series expansion needs a univariate function")
        f = rf_normalize(self)
        shift = f.numerator.min_exponents()[0] - f.denominator.min_exponents()[0]
        den_low = f.denominator.min_exponents()[0]
        if den_low != 0:
            raise ValueError("denominator vanishes at 0")
        if shift < 0:
            raise ValueError("function has a pole at 0")

        def coeffs(p: SparseLaurent, lo: int):
            out = [Fraction(0)] * (order + 1)
            for (e,), c in p.terms.items():
                if 0 <= e - lo <= order:
                    out[e - lo] = c
            return out

        num = TruncatedSeries(self.variables[0], tuple(coeffs(f.numerator, 0)))
        den = TruncatedSeries(self.variables[0], tuple(coeffs(f.denominator, 0)))
        return num * den.inverse()

    def __repr__(self):
        return f"({self.numerator}) / ({self.denominator})"


def _univariate_gcd(a: SparseLaurent, b: SparseLaurent) -> SparseLaurent:
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    lt = a.leading_term()[1]
    return a / lt


def rf_normalize(f: RationalFunction) -> RationalFunction:
    """Canonical form of a rational function.

    Steps: clear the common monomial content so both sides are honest
    polynomials, cancel the denominator when it divides the numerator (and
    cancel the gcd in the univariate case), then scale so the denominator's
    constant term is 1, or its lexicographically leading coefficient is 1
    when there is no constant term.
    """
    num, den = f.numerator, f.denominator
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    vs = num.variables
    if num.is_zero():
        return RationalFunction(num, SparseLaurent.constant(vs, 1))
    lo = tuple(min(a, b) for a, b in zip(num.min_exponents(), den.min_exponents()))
    neg = tuple(-x for x in lo)
    num, den = num.shift(neg), den.shift(neg)
    # cancel pure-monomial content left on both sides
    common = tuple(min(a, b) for a, b in zip(num.min_exponents(), den.min_exponents()))
    if any(common):
        neg = tuple(-x for x in common)
        num, den = num.shift(neg), den.shift(neg)
    if not den.is_monomial():
        q, r = poly_divmod(num, den)
        if r.is_zero():
            num, den = q, SparseLaurent.constant(vs, 1)
        elif len(vs) == 1:
            g = _univariate_gcd(num, den)
            if not (g.is_monomial() and g.terms.get((0,))):
                num, _ = poly_divmod(num, g)
                den, _ = poly_divmod(den, g)
    if den.is_monomial():
        # a monomial denominator is folded into the numerator's exponents
        (e, c), = den.terms.items()
        num = num.shift(tuple(-x for x in e))
        den = SparseLaurent.constant(vs, c)
    zero = (0,) * len(vs)
    lead = den.terms.get(zero)
    if lead is None:
        lead = den.leading_term()[1]
    return RationalFunction(num / lead, den / lead)
