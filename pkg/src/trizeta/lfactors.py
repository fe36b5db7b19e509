"""Unramified local L-factors as Euler products over Satake parameters.

Each factor is prod_gamma (1 - gamma T)^{-1} with T = q^{-s}; the kinds
differ only in the index set of gamma.  Argument shifts such as s + 1/2 are
the caller's business.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .exactalg import RationalFunction, SparseLaurent, TruncatedSeries, rf_normalize
from .symfunc import SatakePoint, as_point


class DivergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class LFactorKind:
    tag: str
    params: tuple

    def __post_init__(self):
        arity = {"standard": 1, "rankin_selberg": 2, "triple": 3}
        if self.tag not in arity:
            raise ValueError(f"unknown L-factor kind {self.tag!r}")
        if len(self.params) != arity[self.tag]:
            raise ValueError(f"{self.tag} takes {arity[self.tag]} parameter lists")

    @classmethod
    def standard(cls, alpha) -> "LFactorKind":
        return cls("standard", (as_point(alpha),))

    @classmethod
    def rankin_selberg(cls, alpha, alpha_prime) -> "LFactorKind":
        return cls("rankin_selberg", (as_point(alpha), as_point(alpha_prime)))

    @classmethod
    def triple(cls, a1, a2, a3) -> "LFactorKind":
        return cls("triple", (as_point(a1), as_point(a2), as_point(a3)))

    @property
    def exact(self) -> bool:
        return all(p.is_exact for p in self.params)

    def indexed_gammas(self) -> list[tuple[tuple, object]]:
        """(index, gamma) pairs over the Euler-product index set."""
        out = []
        for idx in product(*(range(len(p)) for p in self.params)):
            g = self.params[0].values[idx[0]]
            for k, j in enumerate(idx[1:], start=1):
                g = g * self.params[k].values[j]
            out.append((idx, g))
        return out

    def gammas(self) -> list:
        return [g for _, g in self.indexed_gammas()]

    def degree(self) -> int:
        n = 1
        for p in self.params:
            n *= len(p)
        return n


def dual(alpha) -> SatakePoint:
    """Parameters of the contragredient."""
    a = as_point(alpha)
    return SatakePoint([1 / v for v in a.values], a.mode)


def euler_series(gammas: Sequence, N: int, variable: str = "T") -> TruncatedSeries:
    """prod (1 - gamma T)^{-1} through order N, one geometric factor at a time."""
    exact = not any(isinstance(g, (complex, float)) for g in gammas)
    one = Fraction(1) if exact else 1 + 0j
    c = [one] + [one * 0] * N
    for g in gammas:
        for n in range(1, N + 1):
            c[n] = c[n] + g * c[n - 1]
    return TruncatedSeries(variable, tuple(c))


def l_series(kind: LFactorKind, N: int, variable: str = "T") -> TruncatedSeries:
    return euler_series(kind.gammas(), N, variable)


def l_rational(kind: LFactorKind, variable: str = "T") -> RationalFunction:
    if not kind.exact:
        raise ValueError("exact rational form needs exact parameters")
    vs = (variable,)
    den = SparseLaurent.constant(vs, 1)
    t = SparseLaurent.var(vs, variable)
    for g in kind.gammas():
        den = den * (1 - g * t)
    return rf_normalize(RationalFunction(SparseLaurent.constant(vs, 1), den))


def l_numeric(kind: LFactorKind, q: float, s: complex) -> complex:
    t = complex(q) ** (-complex(s))
    val = 1 + 0j
    for idx, g in kind.indexed_gammas():
        z = complex(g) * t
        if abs(z) >= 1:
            raise DivergenceError(f"Euler factor at index {idx} has |gamma q^-s| = {abs(z):.6g} >= 1")
        val /= 1 - z
    return val
