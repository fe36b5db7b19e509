"""The naive-basic-function zeta integral, two ways.

Direct form (brute force over the unfolded torus integral):

    Z = sum_{l, k} a^l prod_i b_i^{k_i} F_i(l + k_i),
    F_i(m) = sum_lam S_{(lam,0,-m)}(alpha_i) S_lam(alpha'_i) x_i^{|lam|}

Closed form (after the Rankin-Selberg identity):

    Z = sum_{l, k} a^l prod_i L_i b_i^{k_i} P_i(l + k_i),
    P_i(m) = sum_{n <= r_i-2} (-1)^n S_{(0,..,0,n-m)}(alpha_i) e_n(alpha'_i) x_i^n

with a = q^{-(s+1/2)}, b_i = q^{-(s_i+1/2)}, x_i = q^{-(C_i+1/2)} and
L_i = L(C_i + 1/2, pi_i x pi'_i).  The factor |lambda c|^{(1-r)/2} of the
unfolded integral cancels the q^{-l(r-1)/2} of the torus identity, so no
half powers of q survive.

Numeric sums come with a certified truncation bound.  Every term is
dominated by a product of geometric sequences: the Schur values by
dim(mu) max|alpha|^{|mu|}, the Weyl dimension by a polynomial, and each
polynomial p(n) by K (1+delta)^n with K found by scanning until the ratio
p(n+1)/p(n) drops below 1+delta.  The tail outside the truncation box is
then T (1 - prod_g (1 - w_g^{N_g+1})) in closed form.
"""
from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..exactalg import SparseLaurent, truncated_product
from ..lfactors import DivergenceError, LFactorKind, dual, euler_series, l_numeric
from ..symfunc import SatakePoint, partitions_up_to, schur_numeric_scaled, trace_wedge
from .params import ConeError, ZetaParams, cone_check, exponents_CA, random_tempered_params
from .rankin import rankin_lhs, rankin_rhs, shifted_weight
from .report import VerificationReport, encode_value, mismatch

FORMAL_VARS = ("Y", "Y1", "Y2", "Y3", "X1", "X2", "X3")
DELTAS = (0.5, 0.25, 0.1, 0.05, 0.02, 0.01, 0.005)
EPS = 2.0 ** -52
MAX_ELL = 400
MAX_LAMBDA = 80


class InsufficientTruncationError(ArithmeticError):
    def __init__(self, message: str, bound: float):
        super().__init__(message)
        self.bound = bound


@dataclass
class TruncatedValue:
    value: complex
    tail: float
    rounding: float
    ell_max: int
    k_max: int
    lam_max: int | None = None
    delta: float = 0.0
    terms: int = 0

    @property
    def bound(self) -> float:
        return self.tail + self.rounding


# ---------------------------------------------------------------- numerics

@dataclass
class _Block:
    r: int
    alpha: tuple
    alpha_p: tuple
    x: complex
    b: complex
    M: float
    Mp: float
    det_abs: float

    @property
    def rho(self) -> float:
        return self.M ** (self.r - 1) / self.det_abs


def _numeric_view(p: ZetaParams):
    if p.s_vec is None or p.s is None:
        raise ValueError("numeric evaluation needs s_vec and s")
    q = float(p.q)
    logq = math.log(q)
    ca = p.exponents()
    s = complex(p.s)
    a = cmath.exp(-(s + 0.5) * logq)
    blocks = []
    for i in range(3):
        al = tuple(complex(v) for v in p.alpha[i].values)
        ap = tuple(complex(v) for v in p.alpha_prime[i].values)
        x = cmath.exp(-(complex(ca.C[i]) + 0.5) * logq)
        b = cmath.exp(-(complex(p.s_vec[i]) + 0.5) * logq)
        det = 1 + 0j
        for v in al:
            det *= v
        blocks.append(_Block(p.r[i], al, ap, x, b, max(abs(v) for v in al), max(abs(v) for v in ap), abs(det)))
    return a, blocks


def _require_cone(p: ZetaParams, margin: float) -> None:
    if not cone_check(p.r, p.s_vec, p.s, margin):
        raise ConeError(f"(s_vec, s) = ({p.s_vec}, {p.s}) is outside the cone with margin {margin}")


def _log_binom(n: int, k: int) -> float:
    if k < 0 or n < k:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _log_weyl_poly(N: int, r: int) -> float:
    """log of prod_{d<r} ((N+d)/d)^{r-d}, which dominates dim V_mu for mu_1 - mu_r <= N."""
    return sum((r - d) * math.log((N + d) / d) for d in range(1, r))


def _exp_constant(logf, delta: float, limit: int = 100000) -> float:
    """max_n f(n) / (1+delta)^n for a polynomially growing f."""
    ld = math.log1p(delta)
    best = -math.inf
    n = 0
    cur = logf(0)
    while n < limit:
        best = max(best, cur - n * ld)
        nxt = logf(n + 1)
        if nxt - cur <= ld and n > 0:
            break
        cur = nxt
        n += 1
    else:
        raise InsufficientTruncationError("polynomial majorant constant did not stabilize", math.inf)
    return math.exp(best)


def _geometric_tail(total: float, groups: Sequence[tuple[float, int]]) -> float:
    """total * (1 - prod (1 - w^{N+1})) evaluated without cancellation."""
    acc = 0.0
    for w, n in groups:
        if w <= 0:
            continue
        acc += math.log1p(-(w ** (n + 1)))
    return total * -math.expm1(acc)


def _sizes_for(total: float, ratios: Sequence[float], tol: float) -> list[int]:
    g = len(ratios)
    out = []
    for w in ratios:
        if w <= 0:
            out.append(0)
            continue
        target = tol / (total * g)
        if target >= 1:
            out.append(0)
            continue
        out.append(max(0, math.ceil(math.log(target) / math.log(w)) - 1))
    return out


@dataclass
class _DirectMajorant:
    delta: float
    total: float
    u0: float
    u: list
    y: list

    def tail(self, L: int, K: int, lam: int) -> float:
        groups = [(self.u0, L)] + [(w, K) for w in self.u] + [(w, lam) for w in self.y]
        return _geometric_tail(self.total, groups)


def _direct_majorant(a: complex, blocks: list[_Block], delta: float) -> _DirectMajorant | None:
    K = 1.0
    z = []
    y = []
    for bl in blocks:
        r = bl.r
        k1 = _exp_constant(lambda n: _log_binom(n + r - 3, r - 3) + _log_weyl_poly(n, r - 2), delta)
        k2 = _exp_constant(lambda n: _log_weyl_poly(n, r), delta)
        K *= k1 * k2
        z.append(bl.rho * (1 + delta))
        y.append(bl.M * bl.Mp * abs(bl.x) * (1 + delta) ** 2)
    u0 = abs(a) * math.prod(z)
    u = [abs(bl.b) * zi for bl, zi in zip(blocks, z)]
    if u0 >= 1 or any(w >= 1 for w in u) or any(w >= 1 for w in y):
        return None
    total = K / ((1 - u0) * math.prod(1 - w for w in u) * math.prod(1 - w for w in y))
    return _DirectMajorant(delta, total, u0, u, y)


@dataclass
class _ClosedMajorant:
    delta: float
    total: float
    u0: float
    u: list

    def tail(self, L: int, K: int) -> float:
        return _geometric_tail(self.total, [(self.u0, L)] + [(w, K) for w in self.u])


def _closed_majorant(a: complex, blocks: list[_Block], Ls: list[complex], delta: float) -> _ClosedMajorant | None:
    K = 1.0
    z = []
    for bl, Li in zip(blocks, Ls):
        r = bl.r
        k3 = _exp_constant(lambda m: _log_binom(m + r - 1, r - 1), delta)
        absx = abs(bl.x) / bl.rho
        e_abs = [abs(v) for v in bl.alpha_p]
        W = sum(float(trace_wedge(n, SatakePoint(e_abs, "numeric")).real) * absx ** n for n in range(r - 1))
        K *= k3 * W * abs(Li)
        z.append(bl.rho * (1 + delta))
    u0 = abs(a) * math.prod(z)
    u = [abs(bl.b) * zi for bl, zi in zip(blocks, z)]
    if u0 >= 1 or any(w >= 1 for w in u):
        return None
    total = K / ((1 - u0) * math.prod(1 - w for w in u))
    return _ClosedMajorant(delta, total, u0, u)


def _rounding(abs_total: float, chain: int) -> float:
    """Floating-point allowance for a nested sum of products.

    abs_total is the same sum evaluated on magnitudes (Schur values replaced
    by their absolute Jacobi-Trudi expansion), so it bounds every partial
    sum; chain is the longest sequence of roundings feeding one term.  This
    is the standard a priori bound for recursive summation, padded by 4x.
    """
    return 4 * chain * EPS * abs_total


def _partition_count(n: int, parts: int) -> int:
    return math.comb(n + parts, parts)


def _block_F_numeric(bl: _Block, m: int, lam_max: int) -> tuple[complex, float]:
    al = SatakePoint(bl.alpha, "numeric")
    acc, acc_abs = 0j, 0.0
    ax = abs(bl.x)
    for lam in partitions_up_to(lam_max, bl.r - 2):
        v, va = schur_numeric_scaled(shifted_weight(lam, bl.r, m), al)
        w, wa = _schur_prime(lam.padded(bl.r - 2), bl.alpha_p)
        acc += v * w * bl.x ** lam.size
        acc_abs += va * wa * ax ** lam.size
    return acc, acc_abs


@lru_cache(maxsize=1 << 16)
def _schur_prime(lam: tuple, alpha_p: tuple) -> tuple[complex, float]:
    return schur_numeric_scaled(lam, SatakePoint(alpha_p, "numeric"))


def _nested_sum(a: complex, blocks: list, F: list, L: int, K: int, Ls=None) -> tuple[complex, float]:
    """sum_l a^l prod_i Ls_i sum_k b_i^k F_i(l+k), with the same sum on magnitudes."""
    total, total_abs = 0j, 0.0
    for ell in range(L + 1):
        term, term_abs = a ** ell, abs(a) ** ell
        for i, bl in enumerate(blocks):
            g, ga = 0j, 0.0
            for k in range(K + 1):
                v, va = F[i][ell + k]
                g += bl.b ** k * v
                ga += abs(bl.b) ** k * va
            if Ls is not None:
                g *= Ls[i]
                ga *= abs(Ls[i])
            term *= g
            term_abs *= ga
        total += term
        total_abs += term_abs
    return total, total_abs


def znaive_direct(p: ZetaParams, ell_max: int | None = None, k_max: int | None = None,
                  lam_max: int | None = None, tol: float | None = None, margin: float = 1.0,
                  check_cone: bool = True) -> TruncatedValue:
    """Brute-force triple sum with a certified truncation bound."""
    if check_cone:
        _require_cone(p, margin)
    a, blocks = _numeric_view(p)
    explicit = None not in (ell_max, k_max, lam_max)
    if not explicit and tol is None:
        tol = 1e-10
    best = None
    for delta in DELTAS:
        maj = _direct_majorant(a, blocks, delta)
        if maj is None:
            continue
        if explicit:
            L, K, lam = ell_max, k_max, lam_max
        else:
            sizes = _sizes_for(maj.total, [maj.u0] + maj.u + maj.y, tol)
            L = sizes[0] if ell_max is None else ell_max
            K = max(sizes[1:4]) if k_max is None else k_max
            lam = max(sizes[4:]) if lam_max is None else lam_max
        tail = maj.tail(L, K, lam)
        cost = (L + K + 1) * sum(_partition_count(lam, bl.r - 2) for bl in blocks)
        key = (tail if explicit else cost, tail)
        if best is None or key < best[0]:
            best = (key, maj, L, K, lam, tail)
    if best is None:
        raise ConeError("direct sum is not absolutely convergent at these parameters")
    _, maj, L, K, lam, tail = best
    if L > MAX_ELL or K > MAX_ELL or lam > MAX_LAMBDA:
        raise InsufficientTruncationError(f"truncation ({L}, {K}, {lam}) exceeds the caps", tail)
    F = [[_block_F_numeric(bl, m, lam) for m in range(L + K + 1)] for bl in blocks]
    total, total_abs = _nested_sum(a, blocks, F, L, K)
    terms = (L + 1) * (K + 1) * 3 + sum((L + K + 1) * _partition_count(lam, bl.r - 2) for bl in blocks)
    chain = (L + 1) + (K + 1) + max(_partition_count(lam, bl.r - 2) + lam + 30 + 2 * bl.r for bl in blocks)
    rnd = _rounding(total_abs, chain)
    if tol is not None and tail > tol:
        raise InsufficientTruncationError(f"tail bound {tail:.3g} exceeds tolerance {tol:.3g}", tail)
    return TruncatedValue(total, tail, rnd, L, K, lam, maj.delta, terms)


def _closed_P(bl: _Block, m: int) -> tuple[complex, float]:
    al = SatakePoint(bl.alpha, "numeric")
    ap = SatakePoint(bl.alpha_p, "numeric")
    ap_abs = SatakePoint([abs(v) for v in bl.alpha_p], "numeric")
    val, val_abs = 0j, 0.0
    for n in range(bl.r - 1):
        v, va = schur_numeric_scaled((0,) * (bl.r - 1) + (n - m,), al)
        val += (-1) ** n * v * trace_wedge(n, ap) * bl.x ** n
        val_abs += va * trace_wedge(n, ap_abs).real * abs(bl.x) ** n
    return val, val_abs


def _znaive_closed_numeric(p: ZetaParams, ell_max, k_max, tol, margin, perturb, check_cone) -> TruncatedValue:
    if check_cone:
        _require_cone(p, margin)
    a, blocks = _numeric_view(p)
    q = float(p.q)
    ca = p.exponents()
    Ls = []
    for i, bl in enumerate(blocks):
        kind = LFactorKind.rankin_selberg(SatakePoint(bl.alpha, "numeric"), SatakePoint(bl.alpha_p, "numeric"))
        try:
            Ls.append(l_numeric(kind, q, complex(ca.C[i]) + 0.5))
        except DivergenceError as exc:
            raise ConeError(str(exc)) from exc
    explicit = ell_max is not None and k_max is not None
    if not explicit and tol is None:
        tol = 1e-10
    best = None
    for delta in DELTAS:
        maj = _closed_majorant(a, blocks, Ls, delta)
        if maj is None:
            continue
        if explicit:
            L, K = ell_max, k_max
        else:
            sizes = _sizes_for(maj.total, [maj.u0] + maj.u, tol)
            L = sizes[0] if ell_max is None else ell_max
            K = max(sizes[1:]) if k_max is None else k_max
        tail = maj.tail(L, K)
        key = (tail if explicit else L + K, tail)
        if best is None or key < best[0]:
            best = (key, maj, L, K, tail)
    if best is None:
        raise ConeError("closed sum is not absolutely convergent at these parameters")
    _, maj, L, K, tail = best
    if L > MAX_ELL or K > MAX_ELL:
        raise InsufficientTruncationError(f"truncation ({L}, {K}) exceeds the caps", tail)
    P = [[_closed_P(bl, m) for m in range(L + K + 1)] for bl in blocks]
    if perturb:
        v, va = P[0][0]
        P[0][0] = (v + 1e-3, va + 1e-3)
    total, total_abs = _nested_sum(a, blocks, P, L, K, Ls)
    terms = (L + 1) * (K + 1) * 3 + (L + K + 1) * 3 * 6
    # each L-factor is a product of at most r_i (r_i - 2) reciprocals
    chain = (L + 1) + (K + 1) + 40 + max(bl.r * bl.r for bl in blocks)
    rnd = _rounding(total_abs, chain)
    if tol is not None and tail > tol:
        raise InsufficientTruncationError(f"tail bound {tail:.3g} exceeds tolerance {tol:.3g}", tail)
    return TruncatedValue(total, tail, rnd, L, K, None, maj.delta, terms)


def znaive_closed(p: ZetaParams, mode: str = "numeric", ell_max: int | None = None, k_max: int | None = None,
                  N: int | None = None, tol: float | None = None, margin: float = 1.0,
                  perturb: bool = False, check_cone: bool = True):
    """Closed form of the zeta integral.

    numeric: a TruncatedValue with certified tail.  exact: the partial sum over
    l <= ell_max, k_i <= k_max as a polynomial in the formal variables
    Y = q^{-(s+1/2)}, Y_i = q^{-(s_i+1/2)}, X_i = q^{-(C_i+1/2)}, with each
    L-factor expanded through X_i^N.
    """
    if mode == "numeric":
        return _znaive_closed_numeric(p, ell_max, k_max, tol, margin, perturb, check_cone)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if ell_max is None or k_max is None or N is None:
        raise ValueError("exact mode needs ell_max, k_max and N")
    return _formal_box(p, ell_max, k_max, N, closed=True, perturb=perturb)


# ------------------------------------------------------- exact formal sums

def _block_series(p: ZetaParams, i: int, m: int, N: int, closed: bool) -> tuple:
    r = p.r[i]
    if closed:
        return rankin_rhs(r, m, p.alpha[i], p.alpha_prime[i], N).coeffs
    return rankin_lhs(r, m, p.alpha[i], p.alpha_prime[i], N).coeffs


def _formal_box(p: ZetaParams, ell_max: int, k_max: int, N: int, closed: bool,
                perturb: bool = False, total_degree: int | None = None) -> SparseLaurent:
    """sum_{l<=ell_max, k_i<=k_max} Y^l prod_i Y_i^{k_i} B_i(l+k_i)(X_i), B_i through X_i^N."""
    if not p.exact:
        raise ValueError("formal sums need exact Satake parameters")
    nv = len(FORMAL_VARS)
    cache = {}

    def block(i, m):
        key = (i, m)
        if key not in cache:
            c = list(_block_series(p, i, m, N, closed))
            if perturb and closed and i == 0 and m == 0:
                c[0] = c[0] + 1
            cache[key] = c
        return cache[key]

    out = SparseLaurent(FORMAL_VARS)
    for ell in range(ell_max + 1):
        if total_degree is not None and ell > total_degree:
            break
        budget = None if total_degree is None else total_degree - ell
        factors = []
        for i in range(3):
            terms = {}
            for k in range(k_max + 1):
                if budget is not None and k > budget:
                    break
                for n, c in enumerate(block(i, ell + k)):
                    if c == 0 or (budget is not None and k + n > budget):
                        continue
                    e = [0] * nv
                    e[1 + i] = k
                    e[4 + i] = n
                    terms[tuple(e)] = c
            factors.append(SparseLaurent(FORMAL_VARS, terms))
        if budget is None:
            prod_i = factors[0] * factors[1] * factors[2]
        else:
            prod_i = truncated_product(factors, budget)
        out = out + prod_i.shift((ell, 0, 0, 0, 0, 0, 0))
    return out


def znaive_direct_series(p: ZetaParams, N: int) -> SparseLaurent:
    """Direct form as a formal series in FORMAL_VARS through total degree N."""
    return _formal_box(p, N, N, N, closed=False, total_degree=N)


def znaive_closed_series(p: ZetaParams, N: int) -> SparseLaurent:
    return _formal_box(p, N, N, N, closed=True, total_degree=N)


def formal_series_from_univariate(var: str, coeffs: Sequence) -> SparseLaurent:
    idx = FORMAL_VARS.index(var)
    terms = {}
    for n, c in enumerate(coeffs):
        e = [0] * len(FORMAL_VARS)
        e[idx] = n
        terms[tuple(e)] = c
    return SparseLaurent(FORMAL_VARS, terms)


def full_l_series(p: ZetaParams, N: int) -> list[SparseLaurent]:
    """The seven Euler products of the normalizing L-function in formal variables."""
    duals = [dual(a) for a in p.alpha]
    out = [formal_series_from_univariate("Y", euler_series(LFactorKind.triple(*duals).gammas(), N).coeffs)]
    for i in range(3):
        out.append(formal_series_from_univariate(f"Y{i + 1}", euler_series(duals[i].values, N).coeffs))
    for i in range(3):
        kind = LFactorKind.rankin_selberg(p.alpha[i], p.alpha_prime[i])
        out.append(formal_series_from_univariate(f"X{i + 1}", euler_series(kind.gammas(), N).coeffs))
    return out


# ----------------------------------------------------------- comparisons

def compare_direct_closed(p: ZetaParams, tol: float = 1e-10, margin: float = 1.0,
                          perturb: bool = False, name: str | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    name = name or f"theorem r={p.r} q={float(p.q):g}"
    d = znaive_direct(p, tol=tol, margin=margin)
    c = znaive_closed(p, "numeric", tol=tol, margin=margin, perturb=perturb)
    diff = abs(d.value - c.value)
    allowed = d.bound + c.bound
    details = {"direct": d.value, "closed": c.value, "difference": diff, "allowed": allowed,
               "direct_box": [d.ell_max, d.k_max, d.lam_max], "closed_box": [c.ell_max, c.k_max]}
    if diff <= allowed:
        return VerificationReport(name, "pass", d.terms + c.terms, None, time.perf_counter() - t0, details=details)
    return VerificationReport(name, "fail", d.terms + c.terms, mismatch("value", d.value, c.value),
                              time.perf_counter() - t0, details=details)


def default_scan_point(r: Sequence[int], eps: float) -> tuple[tuple, float]:
    """s_i = 3.5 eps, and s large enough that every C_i is at least 2.5 eps / (r_i - 2)."""
    sigma = 3.5 * eps
    s = sigma + 2.5 * eps * max(ri - 2 for ri in r)
    return (sigma, sigma, sigma), s


def full_l_numeric(p: ZetaParams) -> complex:
    q = float(p.q)
    ca = p.exponents()
    duals = [dual(a) for a in p.alpha]
    val = l_numeric(LFactorKind.triple(*duals), q, complex(p.s) + 0.5)
    for i in range(3):
        val *= l_numeric(LFactorKind.rankin_selberg(p.alpha[i], p.alpha_prime[i]), q, complex(ca.C[i]) + 0.5)
        val *= l_numeric(LFactorKind.standard(duals[i]), q, complex(p.s_vec[i]) + 0.5)
    return val


def tempered_scan(r: Sequence[int], q_list: Sequence[float], eps: float, trials: int, seed: int = 0,
                  s_vec=None, s=None, constant: float = 50.0, trend: bool = True,
                  tol: float = 1e-13, perturb: bool = False) -> VerificationReport:
    """|R(q) - 1| q^{1+eps/2} for R = Z / (full L-product), tempered parameters.

    The trend check asks every scaled value to stay within twice the
    smallest value seen at the smaller q.  perturb doubles Z, a wrong
    normalization constant, which the scan has to notice.
    """
    t0 = time.perf_counter()
    name = f"tempered r={tuple(r)} eps={eps}"
    if eps <= 0:
        raise ValueError("eps must be positive")
    if s_vec is None or s is None:
        s_vec, s = default_scan_point(r, eps)
    ca = exponents_CA(r, s_vec, s)
    if complex(s).real <= eps or any(complex(x).real <= eps for x in s_vec) \
            or any(complex(c).real <= eps for c in ca.C):
        raise ValueError("scan point must satisfy Re(s), Re(s_i), Re(C_i) > eps")
    rng = random.Random(seed)
    per_q = {}
    worst = (0.0, None)
    checked = 0
    for q in q_list:
        body, intro = [], []
        for _ in range(trials):
            p = random_tempered_params(rng, r, float(q), s_vec, s)
            z = znaive_direct(p, tol=tol, check_cone=False)
            R = z.value * (2 if perturb else 1) / full_l_numeric(p)
            dev = abs(R - 1)
            body.append(dev * q ** (1 + eps / 2))
            intro.append(dev * q ** (1 + eps))
            checked += 1
            if body[-1] > worst[0]:
                worst = (body[-1], {"q": q, "R": R, "bound": z.bound})
        per_q[str(q)] = {"max_scaled": max(body), "max_scaled_intro": max(intro)}
    values = [per_q[str(q)]["max_scaled"] for q in q_list]
    bounded = max(values) <= constant
    bad_trend = None
    if trend:
        for j in range(1, len(values)):
            if values[j] > 2 * min(values[:j]):
                bad_trend = j
                break
    details = {"per_q": per_q, "constant": constant, "s_vec": list(s_vec), "s": s,
               "trend_ok": bad_trend is None}
    if bounded and bad_trend is None:
        return VerificationReport(name, "pass", checked, None, time.perf_counter() - t0, details=details)
    if not bounded:
        witness = mismatch(encode_value(worst[1]), f"<= {constant}", worst[0])
    else:
        witness = mismatch({"q": q_list[bad_trend], "trend": "scaled deviation"},
                           f"<= 2 * {min(values[:bad_trend])!r}", values[bad_trend])
    return VerificationReport(name, "fail", checked, witness,
                              time.perf_counter() - t0, details=details)
