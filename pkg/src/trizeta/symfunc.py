"""Schur polynomials, exterior-power traces and unramified Whittaker values.

Weights are integer tuples; anything that is not weakly decreasing has
Schur value 0.  Exact points (Fractions) use the bialternant a_{lam+delta}/a_delta
with Bareiss determinants, negative weights go through the shift identity
S_{lam + c(1,..,1)} = (prod x)^c S_lam.  Numeric points (complex floats) use
Jacobi-Trudi, which avoids dividing by a small Vandermonde.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import prod
from typing import Iterator, Sequence

import numpy as np

from .exactalg import MatrixQ, det_exact, half_power

TEMPERED_TOL = 1e-12


class SingularDenominatorError(ZeroDivisionError):
    """Repeated Satake coordinates make the Weyl denominator vanish."""


class DominantWeight(tuple):
    """Weakly decreasing integer tuple (entries may be negative)."""

    def __new__(cls, entries: Sequence[int]):
        entries = tuple(int(e) for e in entries)
        if not is_dominant(entries):
            raise ValueError(f"{entries} is not weakly decreasing")
        return super().__new__(cls, entries)


class Partition(tuple):
    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts) or not is_dominant(parts):
            raise ValueError(f"{parts} is not a partition")
        return super().__new__(cls, tuple(p for p in parts if p))

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, length: int) -> tuple:
        if len(self) > length:
            raise ValueError(f"partition {tuple(self)} has more than {length} parts")
        return tuple(self) + (0,) * (length - len(self))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def classify_weight(lam: Sequence[int]) -> DominantWeight | None:
    """DominantWeight for monotone tuples, None (Schur value 0) otherwise."""
    lam = tuple(lam)
    return DominantWeight(lam) if is_dominant(lam) else None


class SatakePoint:
    """Satake parameters; mode is 'exact' (nonzero rationals) or 'tempered'."""

    __slots__ = ("values", "mode")

    def __init__(self, values: Sequence, mode: str | None = None):
        vals = tuple(values)
        if mode is None:
            mode = "exact" if all(isinstance(v, (int, Fraction)) for v in vals) else "tempered"
        if mode == "exact":
            vals = tuple(Fraction(v) for v in vals)
        elif mode in ("tempered", "numeric"):
            vals = tuple(complex(v) for v in vals)
            if mode == "tempered" and any(abs(abs(v) - 1) > TEMPERED_TOL for v in vals):
                raise ValueError("tempered parameters must have modulus 1")
        else:
            raise ValueError(f"unknown mode {mode!r}")
        if any(v == 0 for v in vals):
            raise ValueError("Satake parameters must be nonzero")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("SatakePoint is immutable")

    @classmethod
    def exact(cls, values):
        return cls(values, "exact")

    @classmethod
    def tempered(cls, values):
        return cls(values, "tempered")

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other):
        return isinstance(other, SatakePoint) and (self.values, self.mode) == (other.values, other.mode)

    def __hash__(self):
        return hash((self.values, self.mode))

    def __repr__(self):
        return f"SatakePoint({list(self.values)!r}, {self.mode!r})"

    def numeric(self) -> "SatakePoint":
        if not self.is_exact:
            return self
        return SatakePoint([complex(v) for v in self.values], "numeric")

    def product(self):
        return prod(self.values, start=Fraction(1) if self.is_exact else 1 + 0j)

    def has_repeats(self) -> bool:
        return len(set(self.values)) != len(self.values)


def as_point(x) -> SatakePoint:
    return x if isinstance(x, SatakePoint) else SatakePoint(x)


def partitions_up_to(total: int, max_length: int) -> list[Partition]:
    """All partitions with |lam| <= total and at most max_length parts.

    Ordered by size, then lexicographically decreasing within a size.
    """
    return [Partition(p) for n in range(total + 1) for p in _partitions_of(n, max_length, n)]


def _partitions_of(n: int, length: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    if length == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, length - 1, first):
            yield (first,) + rest


def _check_distinct(x: SatakePoint) -> None:
    if x.is_exact and x.has_repeats():
        raise SingularDenominatorError(f"repeated Satake coordinates {list(x.values)}")


@lru_cache(maxsize=1 << 16)
def _vandermonde_det(xs: tuple) -> Fraction:
    r = len(xs)
    return prod((xs[i] - xs[j] for i in range(r) for j in range(i + 1, r)), start=Fraction(1))


@lru_cache(maxsize=1 << 18)
def _bialternant(mu: tuple, xs: tuple) -> Fraction:
    r = len(xs)
    m = MatrixQ.from_rows([[x ** (mu[i] + r - 1 - i) for x in xs] for i in range(r)])
    return det_exact(m) / _vandermonde_det(xs)


def schur_value(lam: Sequence[int], x):
    """S_lam(x), zero unless lam is weakly decreasing."""
    x = as_point(x)
    lam = tuple(int(v) for v in lam)
    if len(lam) != len(x):
        raise ValueError(f"weight of length {len(lam)} at a point of length {len(x)}")
    _check_distinct(x)
    if not is_dominant(lam):
        return Fraction(0) if x.is_exact else 0j
    if not lam:
        return Fraction(1) if x.is_exact else 1 + 0j
    c = lam[-1]
    mu = tuple(v - c for v in lam)
    if x.is_exact:
        val = _bialternant(mu, x.values)
    else:
        val = _jt_numeric(mu, x.values)
    if c:
        val = val * x.product() ** c
    return val


def complete_homogeneous(k: int, x) -> object:
    x = as_point(x)
    return _h_list(x.values, k)[k] if k >= 0 else (Fraction(0) if x.is_exact else 0j)


@lru_cache(maxsize=1 << 12)
def _h_list(xs: tuple, n: int) -> tuple:
    """h_0..h_n of xs via the product of geometric series."""
    one = Fraction(1) if isinstance(xs[0], Fraction) else 1 + 0j
    h = [one] + [one * 0] * n
    for x in xs:
        for k in range(1, n + 1):
            h[k] = h[k] + x * h[k - 1]
    return tuple(h)


def schur_jacobi_trudi(lam: Sequence[int], x):
    """S_lam = det(h_{lam_i - i + j}) for a partition lam with at most r parts."""
    x = as_point(x)
    lam = Partition(lam)
    if len(lam) > len(x):
        return Fraction(0) if x.is_exact else 0j
    n = len(lam)
    if n == 0:
        return Fraction(1) if x.is_exact else 1 + 0j
    h = _h_list(x.values, lam[0] + n)
    zero = h[0] * 0

    def hk(k):
        return h[k] if k >= 0 else zero

    rows = [[hk(lam[i] - i + j) for j in range(n)] for i in range(n)]
    if x.is_exact:
        return det_exact(MatrixQ.from_rows(rows))
    return complex(np.linalg.det(np.array(rows, dtype=complex)))


def _jt_numeric(mu: tuple, xs: tuple) -> complex:
    return _jt_numeric_scaled(mu, xs)[0]


@lru_cache(maxsize=1 << 18)
def _jt_numeric_scaled(mu: tuple, xs: tuple) -> tuple[complex, float]:
    """Jacobi-Trudi determinant by Leibniz expansion, plus the permanent of
    the same matrix at |x|, which bounds every intermediate quantity."""
    parts = tuple(p for p in mu if p)
    n = len(parts)
    if n == 0:
        return 1 + 0j, 1.0
    h = _h_list(xs, parts[0] + n)
    habs = _h_list(tuple(complex(abs(x)) for x in xs), parts[0] + n)
    idx = [[parts[i] - i + j for j in range(n)] for i in range(n)]
    if n > 5:
        rows = [[h[k] if k >= 0 else 0 for k in row] for row in idx]
        val = complex(np.linalg.det(np.array(rows, dtype=complex)))
        scale = prod((sum(abs(habs[k]) for k in row if k >= 0) for row in idx), start=1.0)
        return val, scale
    val, scale = 0j, 0.0
    for perm, sign in _signed_perms(n):
        t, ta = 1 + 0j, 1.0
        for i, j in enumerate(perm):
            k = idx[i][j]
            if k < 0:
                break
            t *= h[k]
            ta *= habs[k].real
        else:
            val += sign * t
            scale += ta
    return val, scale


@lru_cache(maxsize=None)
def _signed_perms(n: int) -> tuple:
    out = []
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        out.append((perm, -1 if inv % 2 else 1))
    return tuple(out)


def schur_numeric_scaled(lam: Sequence[int], x) -> tuple[complex, float]:
    """(S_lam(x), magnitude scale) for a numeric point; scale >= |S_lam(x)|."""
    x = as_point(x)
    lam = tuple(int(v) for v in lam)
    if not is_dominant(lam):
        return 0j, 0.0
    c = lam[-1]
    mu = tuple(v - c for v in lam)
    val, scale = _jt_numeric_scaled(mu, tuple(complex(v) for v in x.values))
    if c:
        px = x.product()
        val *= complex(px) ** c
        scale *= abs(complex(px)) ** c
    return val, scale


def elementary(n: int, x):
    """e_n(x); 0 when n exceeds the number of variables."""
    vals = as_point(x).values
    exact = isinstance(vals[0], Fraction) if vals else True
    one = Fraction(1) if exact else 1 + 0j
    if n < 0 or n > len(vals):
        return one * 0
    e = [one] + [one * 0] * n
    for v in vals:
        for k in range(n, 0, -1):
            e[k] = e[k] + v * e[k - 1]
    return e[n]


def trace_wedge(n: int, x):
    """Trace of the n-th exterior power, i.e. e_n(x)."""
    return elementary(n, x)


def _delta_exponent(lam: Sequence[int]) -> int:
    r = len(lam)
    return sum(l * (r + 1 - 2 * j) for j, l in enumerate(lam, start=1))


def delta_borel(lam: Sequence[int], q):
    """Modulus character of the upper Borel at diag(w^lam_1, ..., w^lam_r)."""
    e = _delta_exponent(lam)
    if isinstance(q, (int, Fraction)):
        return Fraction(q) ** (-e)
    return q ** (-e)


def whittaker_value(lam: Sequence[int], alpha, q):
    """Normalized spherical Whittaker value delta^{1/2}(w^lam) S_lam(alpha).

    The square root of the modulus character is kept exact by working in
    Q(sqrt q) when q is not a square.
    """
    lam = tuple(lam)
    if not is_dominant(lam):
        return Fraction(0)
    s = schur_value(lam, alpha)
    e = _delta_exponent(lam)
    if isinstance(q, (int, Fraction)) and as_point(alpha).is_exact:
        return half_power(q, -e) * s
    return float(q) ** (-e / 2) * s


def monomial_expansion_schur(lam: Sequence[int], x) -> Fraction:
    """Brute-force S_lam as a sum over semistandard tableaux (small cases only).

    Used as a second oracle in tests: counts fillings row by row.
    """
    lam = tuple(lam)
    xs = as_point(x).values
    r = len(xs)
    parts = [p for p in lam if p]
    cells = [(i, j) for i, p in enumerate(parts) for j in range(p)]

    def rec(k, filling):
        if k == len(cells):
            return prod((xs[v] for v in filling.values()), start=Fraction(1))
        i, j = cells[k]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = Fraction(0)
        for v in range(lo, r):
            filling[(i, j)] = v
            total += rec(k + 1, filling)
        filling.pop((i, j), None)
        return total

    return rec(0, {})


__all__ = [
    "DominantWeight", "Partition", "SatakePoint", "SingularDenominatorError", "as_point",
    "classify_weight", "complete_homogeneous", "delta_borel", "elementary", "is_dominant",
    "monomial_expansion_schur", "partitions_up_to", "schur_jacobi_trudi", "schur_numeric_scaled",
    "schur_value",
    "trace_wedge", "whittaker_value",
]
