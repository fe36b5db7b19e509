"""The torus Rankin-Selberg identity and the two identities behind it.

Left side:  q^{-l(r-1)/2} sum_lam S_{(lam,0,-l)}(alpha) S_lam(alpha') T^|lam|
Right side: q^{-l(r-1)/2} L(T, alpha x alpha')
            * sum_{n<=r-2} (-1)^n S_{(0,..,0,n-l)}(alpha) e_n(alpha') T^n
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations, permutations
from math import prod

from ..exactalg import SparseLaurent, TruncatedSeries, half_power
from ..lfactors import LFactorKind, euler_series, l_series
from ..symfunc import (SatakePoint, SingularDenominatorError, as_point, partitions_up_to,
                       schur_value, trace_wedge)
from .report import VerificationReport, compare_sequences, error_report, mismatch


def _prefactor(q, r: int, ell: int):
    if q is None:
        return Fraction(1)
    return half_power(q, -ell * (r - 1))


def _validate(r: int, ell: int, alpha: SatakePoint, alpha_p: SatakePoint) -> None:
    if r < 3:
        raise ValueError("rank must be at least 3")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if len(alpha) != r or len(alpha_p) != r - 2:
        raise ValueError(f"need {r} and {r - 2} Satake parameters")
    for x in (alpha, alpha_p):
        if x.is_exact and x.has_repeats():
            raise SingularDenominatorError(f"repeated Satake coordinates {list(x.values)}")


def shifted_weight(lam, r: int, m: int) -> tuple:
    """(lam_1, ..., lam_{r-2}, 0, -m)."""
    return tuple(lam) + (0,) * (r - 2 - len(lam)) + (0, -m)


def rankin_lhs(r: int, ell: int, alpha, alpha_p, N: int, q=None) -> TruncatedSeries:
    """Truncated partition sum; q=None drops the common q-power prefactor."""
    alpha, alpha_p = as_point(alpha), as_point(alpha_p)
    _validate(r, ell, alpha, alpha_p)
    pre = _prefactor(q, r, ell)
    zero = Fraction(0) if alpha.is_exact else 0j
    coeffs = [zero] * (N + 1)
    for lam in partitions_up_to(N, r - 2):
        a = schur_value(shifted_weight(lam, r, ell), alpha)
        if a == 0:
            continue
        coeffs[lam.size] = coeffs[lam.size] + a * schur_value(lam.padded(r - 2), alpha_p)
    return TruncatedSeries("T", tuple(pre * c for c in coeffs))


def finite_part(r: int, ell: int, alpha, alpha_p) -> list:
    """Coefficients of sum_n (-1)^n S_{(0,..,0,n-ell)}(alpha) e_n(alpha') T^n."""
    alpha, alpha_p = as_point(alpha), as_point(alpha_p)
    return [(-1) ** n * schur_value((0,) * (r - 1) + (n - ell,), alpha) * trace_wedge(n, alpha_p)
            for n in range(r - 1)]


def rankin_rhs(r: int, ell: int, alpha, alpha_p, N: int, q=None, perturb: bool = False) -> TruncatedSeries:
    alpha, alpha_p = as_point(alpha), as_point(alpha_p)
    _validate(r, ell, alpha, alpha_p)
    poly = finite_part(r, ell, alpha, alpha_p)
    if perturb:
        poly[1] = poly[1] + 1
    zero = Fraction(0) if alpha.is_exact else 0j
    poly = TruncatedSeries.from_coeffs(poly, N, zero=zero)
    L = l_series(LFactorKind.rankin_selberg(alpha, alpha_p), N)
    pre = _prefactor(q, r, ell)
    return (L * poly) * pre


def verify_rankin(r: int, ell: int, alpha, alpha_p, N: int, q=None, perturb: bool = False) -> VerificationReport:
    name = f"rankin r={r} l={ell} N={N}"
    t0 = time.perf_counter()
    try:
        lhs = rankin_lhs(r, ell, alpha, alpha_p, N, q)
        rhs = rankin_rhs(r, ell, alpha, alpha_p, N, q, perturb=perturb)
    except (SingularDenominatorError, ValueError) as exc:
        return error_report(name, exc, t0)
    return compare_sequences(name, lhs.coeffs, rhs.coeffs, t0)


def cofactor_sides(r: int, ell: int, x, x_p) -> tuple[list, list]:
    """Both sides of the partial-fraction identity as coefficient lists in T.

    (-1)^{r+1} (prod x) sum_j x_j^{-l-1} prod_m (1 - x_j x'_m T) / prod_{n!=j} (x_j - x_n)
        = sum_m (-1)^m S_{(0,..,0,m-l)}(x) e_m(x') T^m
    """
    x, x_p = as_point(x), as_point(x_p)
    if x.has_repeats():
        raise SingularDenominatorError(f"repeated coordinates {list(x.values)}")
    xs = x.values
    px = x.product()
    lhs = [Fraction(0)] * (r - 1)
    for j, xj in enumerate(xs):
        den = prod((xj - xn for n, xn in enumerate(xs) if n != j), start=Fraction(1))
        base = xj ** (-ell - 1) / den
        for m in range(r - 1):
            # coefficient of T^m in prod_k (1 - xj x'_k T) is (-1)^m e_m(x') xj^m
            lhs[m] += base * (-1) ** m * trace_wedge(m, x_p) * xj ** m
    sign = (-1) ** (r + 1)
    lhs = [sign * px * c for c in lhs]
    rhs = finite_part(r, ell, x, x_p)
    return lhs, rhs


def cofactor_check(r: int, ell: int, x, x_p, N: int | None = None, perturb: bool = False) -> VerificationReport:
    name = f"cofactor r={r} l={ell}"
    t0 = time.perf_counter()
    try:
        lhs, rhs = cofactor_sides(r, ell, x, x_p)
    except SingularDenominatorError as exc:
        return error_report(name, exc, t0)
    if perturb:
        rhs[0] = rhs[0] + 1
    return compare_sequences(name, lhs, rhs, t0)


def _alternant(exps: tuple, xvars: tuple, names: tuple) -> SparseLaurent:
    """det(x_j^{exps_i}) as a Laurent polynomial, by the Leibniz expansion."""
    r = len(exps)
    terms: dict = {}
    nv = len(names)
    for perm in permutations(range(r)):
        sgn = _perm_sign(perm)
        e = [0] * nv
        for i, j in enumerate(perm):
            e[xvars[j]] += exps[i]
        e = tuple(e)
        terms[e] = terms.get(e, 0) + sgn
    return SparseLaurent(names, terms)


def _perm_sign(perm) -> int:
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cofactor_check_symbolic(r: int, ell: int, perturb: bool = False) -> VerificationReport:
    """The same identity as polynomials in x, x', T after clearing a_delta.

    Multiplying by a_delta = prod_{i<j}(x_i - x_j) turns the right side into
    alternants a_{mu + delta}, which vanish for non-dominant mu, and the
    j-th left term into (-1)^j a_delta(x without x_j).
    """
    t0 = time.perf_counter()
    name = f"cofactor-symbolic r={r} l={ell}"
    names = tuple(f"x{i}" for i in range(1, r + 1)) + tuple(f"y{m}" for m in range(1, r - 1)) + ("T",)
    nv = len(names)
    xv = [SparseLaurent.var(names, f"x{i}") for i in range(1, r + 1)]
    yv = [SparseLaurent.var(names, f"y{m}") for m in range(1, r - 1)]
    T = SparseLaurent.var(names, "T")
    one = SparseLaurent.constant(names, 1)
    px = prod(xv, start=one)
    lhs = SparseLaurent(names)
    for j in range(r):
        others = [xv[n] for n in range(r) if n != j]
        vd = prod((others[a] - others[b] for a in range(len(others)) for b in range(a + 1, len(others))),
                  start=one)
        lin = prod((one - xv[j] * y * T for y in yv), start=one)
        lhs = lhs + (-1) ** j * xv[j] ** (-ell - 1) * lin * vd
    lhs = (-1) ** (r + 1) * px * lhs
    rhs = SparseLaurent(names)
    delta = tuple(range(r - 1, -1, -1))
    for m in range(r - 1):
        mu = (0,) * (r - 1) + (m - ell,)
        a = _alternant(tuple(mu[i] + delta[i] for i in range(r)), tuple(range(r)), names)
        em = SparseLaurent(names)
        for idx in combinations(range(r - 2), m):
            em = em + prod((yv[k] for k in idx), start=one)
        rhs = rhs + (-1) ** m * a * em * T ** m
    if perturb:
        rhs = rhs + T
    diff = lhs - rhs
    if diff.is_zero():
        return VerificationReport(name, "pass", len(lhs.terms), None, time.perf_counter() - t0)
    e, c = diff.leading_term()
    exp_map = dict(zip(names, e))
    return VerificationReport(name, "fail", len(lhs.terms),
                              mismatch(exp_map, rhs.coefficient(e), lhs.coefficient(e)), time.perf_counter() - t0)


def cauchy_check(m: int, x, x_p, N: int, perturb: bool = False) -> VerificationReport:
    """sum_lam S_{(lam,0)}(x) S_lam(x') u^|lam| = prod (1 - x_n x'_k u)^{-1} through order N."""
    t0 = time.perf_counter()
    x, x_p = as_point(x), as_point(x_p)
    name = f"cauchy m={m} N={N}"
    if len(x) != m + 1 or len(x_p) != m:
        return error_report(name, ValueError("need m+1 and m variables"), t0)
    coeffs = [Fraction(0)] * (N + 1)
    try:
        for lam in partitions_up_to(N, m):
            coeffs[lam.size] += schur_value(lam.padded(m) + (0,), x) * schur_value(lam.padded(m), x_p)
    except SingularDenominatorError as exc:
        return error_report(name, exc, t0)
    rhs = euler_series([a * b for a in x.values for b in x_p.values], N)
    if perturb:
        coeffs[min(1, N)] += 1
    return compare_sequences(name, rhs.coeffs, coeffs, t0)


__all__ = ["rankin_lhs", "rankin_rhs", "verify_rankin", "cofactor_check", "cofactor_check_symbolic",
           "cofactor_sides", "cauchy_check", "finite_part", "shifted_weight"]
