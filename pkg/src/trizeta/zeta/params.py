"""Zeta-integral parameters, the exponents C_i and A, eta and the cone."""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..symfunc import SatakePoint, as_point


class ConeError(ValueError):
    """(s_vec, s) is not inside the region where the sums converge."""


class InternalIdentityError(AssertionError):
    """Two evaluations that must agree by algebra did not."""


class CompatibilityError(ValueError):
    pass


@dataclass(frozen=True)
class LinearForm:
    """c0 + c_s s + c_1 s1 + c_2 s2 + c_3 s3 with rational coefficients."""

    coeffs: tuple = (Fraction(0),) * 5

    def __post_init__(self):
        if len(self.coeffs) != 5:
            raise ValueError("a linear form in (1, s, s1, s2, s3) has 5 coefficients")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def symbol(cls, name: str) -> "LinearForm":
        idx = {"1": 0, "s": 1, "s1": 2, "s2": 3, "s3": 4}[name]
        return cls(tuple(int(i == idx) for i in range(5)))

    def _other(self, o):
        if isinstance(o, LinearForm):
            return o
        if isinstance(o, (int, Fraction)):
            return LinearForm((o, 0, 0, 0, 0))
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return LinearForm(tuple(-a for a in self.coeffs))

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, c):
        if isinstance(c, LinearForm):
            if all(x == 0 for x in c.coeffs[1:]):
                c = c.coeffs[0]
            elif all(x == 0 for x in self.coeffs[1:]):
                return c * self.coeffs[0]
            else:
                raise TypeError("product of two non-constant linear forms")
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return LinearForm(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __eq__(self, o):
        o2 = self._other(o)
        if o2 is None:
            return NotImplemented
        return self.coeffs == o2.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, s_vec, s):
        vals = (1, s, *s_vec)
        return sum(c * v for c, v in zip(self.coeffs, vals))

    def __repr__(self):
        names = ("", "s", "s1", "s2", "s3")
        parts = [f"{c}{'*' + n if n else ''}" for c, n in zip(self.coeffs, names) if c]
        return " + ".join(parts) if parts else "0"


def symbolic_s() -> tuple[tuple[LinearForm, LinearForm, LinearForm], LinearForm]:
    return tuple(LinearForm.symbol(f"s{i}") for i in (1, 2, 3)), LinearForm.symbol("s")


@dataclass(frozen=True)
class ExponentsCA:
    C: tuple
    A: object


def _check_r(r: Sequence[int]) -> tuple:
    r = tuple(int(x) for x in r)
    if len(r) != 3 or any(x < 3 for x in r):
        raise ValueError(f"need three ranks r_i >= 3, got {r}")
    return r


def _div(x, d: int):
    if isinstance(x, (int, Fraction)):
        return Fraction(x) / d
    if isinstance(x, LinearForm):
        return x / d
    return x / d


def exponents_CA(r: Sequence[int], s_vec: Sequence, s) -> ExponentsCA:
    """C_i and A, each computed two ways and cross-checked."""
    r = _check_r(r)
    s_vec = tuple(s_vec)
    total = s_vec[0] + s_vec[1] + s_vec[2]
    C = []
    for i in range(3):
        a = _div(s + s_vec[i] - s_vec[(i + 1) % 3] - s_vec[(i + 2) % 3], r[i] - 2)
        b = _div(2 * (s_vec[i] + _div(s - total, 2)), r[i] - 2)
        if not _close(a, b):
            raise InternalIdentityError(f"two forms of C_{i + 1} disagree: {a} vs {b}")
        C.append(a)
    A = s
    for i in range(3):
        A = A - _scale(C[i], Fraction(r[i] - 2, 2))
    A2 = _div(-s + total, 2)
    if not _close(A, A2):
        raise InternalIdentityError(f"two forms of A disagree: {A} vs {A2}")
    return ExponentsCA(tuple(C), A)


def _close(a, b) -> bool:
    if isinstance(a, (complex, float)) or isinstance(b, (complex, float)):
        return abs(complex(a) - complex(b)) <= 1e-12 * (1 + abs(complex(a)))
    return a == b


def cone_check(r: Sequence[int], s_vec: Sequence, s, margin: float = 1.0, kappa: float | None = None) -> bool:
    """Membership in the convergence cone with an explicit margin.

    With kappa given (|alpha| within q^{+-kappa}), also requires the direct
    sum's absolute-convergence conditions Re(s)+1/2 > kappa*sum(2r_i-1),
    Re(s_i)+1/2 > kappa(2r_i-1), Re(C_i)+1/2 > 2 kappa.
    """
    if margin <= 0:
        raise ValueError("margin must be positive")
    r = _check_r(r)
    re = lambda z: complex(z).real  # noqa: E731
    ca = exponents_CA(r, [complex(x) for x in s_vec], complex(s))
    sr = re(s)
    if sr < margin:
        return False
    for i in range(3):
        if re(s_vec[i]) - sr / 3 < margin:
            return False
        if re(ca.C[i]) - sr / (3 * (r[i] - 1)) < margin:
            return False
    if kappa:
        if sr + 0.5 <= kappa * sum(2 * x - 1 for x in r):
            return False
        for i in range(3):
            if re(s_vec[i]) + 0.5 <= kappa * (2 * r[i] - 1) or re(ca.C[i]) + 0.5 <= 2 * kappa:
                return False
    return True


def eta_torus_value(r: Sequence[int], s_vec: Sequence, s, ell: int, k: Sequence[int],
                    t_dets: Sequence[int], q=None):
    """eta on the torus elements of the unfolding, from its definition.

    ell, k_i, t_dets are valuations: lambda = w^ell, c_i = w^{k_i},
    det t_i = w^{t_i}.  On these elements nu(h) = lambda[c] and
    det p_1(h_i) = (lambda c_i)^{-1}.  Returns q**e where e is the common
    exponent of both sides; with q None (or symbolic s) returns the exponent
    itself, a LinearForm in symbolic mode.
    """
    r = _check_r(r)
    ca = exponents_CA(r, s_vec, s)
    nu_val = ell + sum(k)
    p1_vals = [-(ell + k[i]) for i in range(3)]
    # |x| = q^{-val x}
    lhs = -nu_val * ca.A
    for i in range(3):
        lhs = lhs + (-t_dets[i]) * ca.C[i]
        lhs = lhs - (-p1_vals[i]) * _scale(ca.C[i], Fraction(r[i] - 2, 2))
    rhs = -ell * s
    for i in range(3):
        rhs = rhs - k[i] * s_vec[i] - t_dets[i] * ca.C[i]
    if not _close(lhs, rhs):
        raise InternalIdentityError(f"eta identity fails: {lhs} vs {rhs}")
    if q is None or isinstance(lhs, LinearForm):
        return lhs
    if isinstance(q, (int, Fraction)) and isinstance(lhs, Fraction) and lhs.denominator == 1:
        return Fraction(q) ** int(lhs)
    return complex(q) ** lhs if isinstance(lhs, complex) else float(q) ** float(lhs)


def _scale(x, c: Fraction):
    if isinstance(x, (complex, float)):
        return x * float(c)
    return x * c


@dataclass(frozen=True)
class ZetaParams:
    r: tuple
    q: object
    alpha: tuple
    alpha_prime: tuple
    s_vec: tuple | None = None
    s: object = None
    allow_incompatible: bool = False
    compatible: bool = field(init=False, default=True)

    def __post_init__(self):
        r = _check_r(self.r)
        object.__setattr__(self, "r", r)
        alpha = tuple(as_point(a) for a in self.alpha)
        alpha_p = tuple(as_point(a) for a in self.alpha_prime)
        if len(alpha) != 3 or len(alpha_p) != 3:
            raise ValueError("need three Satake points on each side")
        for i in range(3):
            if len(alpha[i]) != r[i] or len(alpha_p[i]) != r[i] - 2:
                raise ValueError(f"block {i + 1}: expected lengths {r[i]} and {r[i] - 2}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "alpha_prime", alpha_p)
        if isinstance(self.q, int):
            object.__setattr__(self, "q", Fraction(self.q))
        if float(self.q) <= 1:
            raise ValueError("q must exceed 1")
        ok = all(_central_ok(alpha[i], alpha_p[i]) for i in range(3))
        object.__setattr__(self, "compatible", ok)
        if not ok and not self.allow_incompatible:
            raise CompatibilityError("central characters are not inverse: prod alpha * prod alpha' != 1")

    @property
    def exact(self) -> bool:
        return all(a.is_exact for a in self.alpha + self.alpha_prime)

    def exponents(self) -> ExponentsCA:
        if self.s_vec is None or self.s is None:
            raise ValueError("numeric (s_vec, s) not set")
        return exponents_CA(self.r, self.s_vec, self.s)

    def with_s(self, s_vec, s) -> "ZetaParams":
        return ZetaParams(self.r, self.q, self.alpha, self.alpha_prime, tuple(s_vec), s,
                          self.allow_incompatible)

    def replace_alpha(self, i: int, values, prime: bool = False) -> "ZetaParams":
        a, ap = list(self.alpha), list(self.alpha_prime)
        target = ap if prime else a
        target[i] = SatakePoint(values, target[i].mode)
        return ZetaParams(self.r, self.q, tuple(a), tuple(ap), self.s_vec, self.s, self.allow_incompatible)


def _central_ok(a: SatakePoint, ap: SatakePoint) -> bool:
    val = a.product() * ap.product()
    if a.is_exact and ap.is_exact:
        return val == 1
    return abs(complex(val) - 1) <= 1e-9


_HEIGHT_POOL = sorted({Fraction(p, d) for p in range(1, 8) for d in range(1, 8)} |
                      {-Fraction(p, d) for p in range(1, 6) for d in range(1, 6)})


def random_exact_point(rng: random.Random, n: int) -> SatakePoint:
    return SatakePoint.exact(rng.sample(_HEIGHT_POOL, n))


def random_exact_params(rng: random.Random, r: Sequence[int], q=5, compatible: bool = True) -> ZetaParams:
    """Distinct small-height rationals; the last alpha' entry fixes the central character."""
    r = _check_r(r)
    alphas, primes = [], []
    for ri in r:
        while True:
            a = random_exact_point(rng, ri)
            ap = list(rng.sample(_HEIGHT_POOL, ri - 2))
            if compatible:
                rest = a.product() * math.prod(ap[:-1], start=Fraction(1))
                ap[-1] = 1 / rest
            if len(set(ap)) == len(ap):
                break
        alphas.append(a)
        primes.append(SatakePoint.exact(ap))
    return ZetaParams(r, Fraction(q), tuple(alphas), tuple(primes), allow_incompatible=not compatible)


def random_tempered_point(rng: random.Random, n: int) -> SatakePoint:
    return SatakePoint.tempered([cmath.exp(2j * math.pi * rng.random()) for _ in range(n)])


def random_tempered_params(rng: random.Random, r: Sequence[int], q=5.0, s_vec=None, s=None) -> ZetaParams:
    r = _check_r(r)
    alphas, primes = [], []
    for ri in r:
        a = random_tempered_point(rng, ri)
        ap = [cmath.exp(2j * math.pi * rng.random()) for _ in range(ri - 2)]
        rest = complex(a.product()) * math.prod(ap[:-1], start=1 + 0j)
        last = 1 / rest
        ap[-1] = last / abs(last)
        alphas.append(a)
        primes.append(SatakePoint.tempered(ap))
    return ZetaParams(r, q, tuple(alphas), tuple(primes),
                      tuple(s_vec) if s_vec is not None else None, s)


def sample_cone_point(rng: random.Random, r: Sequence[int], margin: float = 1.0,
                      tries: int = 10000) -> tuple[tuple, float]:
    """A random rational (s_vec, s) passing cone_check with the given margin."""
    r = _check_r(r)
    for _ in range(tries):
        s = Fraction(rng.randint(6 * 4, 16 * 4), 4)
        s_vec = tuple(s / 3 + Fraction(rng.randint(4, 16), 4) for _ in range(3))
        if cone_check(r, s_vec, s, margin):
            return tuple(float(x) for x in s_vec), float(s)
    raise ConeError("could not sample a point inside the cone")
