"""The zeta integral divided by its normalizing L-function.

With the formal variables of the theorem module (Y = q^{-s-1/2},
Y_i = q^{-s_i-1/2}, X_i = q^{-C_i-1/2}) the quotient is the finite sum

    E = (-1)^{r1+r2+r3+3} [omega] sum_{j1,j2,j3} A_j(Y) prod_i B_ij(Y_i) Cf_ij(X_i)

    A_j(Y)     = prod over index triples a != j of (1 - Y / (alpha_1a1 alpha_2a2 alpha_3a3))
    B_ij(Y_i)  = prod_{b != j_i} (1 - Y_i / alpha_ib)
    Cf_ij(X_i) = prod_m (1 - alpha_ij alpha'_im X_i) / (alpha_ij prod_{n != j} (alpha_ij - alpha_in))

where [omega] = prod_ij alpha_ij.  Summing over full permutations instead of
first entries only repeats each j-term (r_i - 1)! times, which the
1/(r_i - 1)! weights undo; literal_sigma_sum keeps the permutation form as
an independent check of that reduction.
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import permutations, product
from math import factorial, lcm, prod

from ..exactalg import RationalFunction, SparseLaurent, rf_normalize, sqrt_exact, truncated_product
from ..symfunc import SingularDenominatorError
from .params import ZetaParams
from .report import VerificationReport, error_report, mismatch
from .theorem import FORMAL_VARS, full_l_series, znaive_closed_series, znaive_direct_series


class PolynomialityError(ArithmeticError):
    """The normalized quotient kept a non-monomial denominator."""


def _require_exact(p: ZetaParams) -> None:
    if not p.exact:
        raise ValueError("the quotient is computed for exact Satake parameters")
    for i, a in enumerate(p.alpha):
        if a.has_repeats():
            raise SingularDenominatorError(f"block {i + 1} has repeated Satake parameters {list(a.values)}")


def _linear(var: str, c) -> SparseLaurent:
    """1 - c * var in the formal variables."""
    return 1 - SparseLaurent.var(FORMAL_VARS, var) * c


def _cofactor_factor(p: ZetaParams, i: int, j: int) -> SparseLaurent:
    a = p.alpha[i].values
    den = a[j] * prod((a[j] - a[n] for n in range(len(a)) if n != j), start=Fraction(1))
    num = prod((_linear(f"X{i + 1}", a[j] * ap) for ap in p.alpha_prime[i].values),
               start=SparseLaurent.constant(FORMAL_VARS, 1))
    return num / den


def formal_quotient(p: ZetaParams) -> SparseLaurent:
    """E as a polynomial in FORMAL_VARS."""
    _require_exact(p)
    one = SparseLaurent.constant(FORMAL_VARS, 1)
    alphas = [a.values for a in p.alpha]
    triples = list(product(*(range(ri) for ri in p.r)))
    tri_factor = {t: _linear("Y", 1 / (alphas[0][t[0]] * alphas[1][t[1]] * alphas[2][t[2]])) for t in triples}
    side = {}
    for i in range(3):
        for j in range(p.r[i]):
            b = prod((_linear(f"Y{i + 1}", 1 / alphas[i][n]) for n in range(p.r[i]) if n != j), start=one)
            side[i, j] = b * _cofactor_factor(p, i, j)
    a_parts = _all_but_one([tri_factor[t] for t in triples], one)
    total = SparseLaurent(FORMAL_VARS)
    for idx, j in enumerate(triples):
        total = total + a_parts[idx] * side[0, j[0]] * side[1, j[1]] * side[2, j[2]]
    omega = prod((v for a in alphas for v in a), start=Fraction(1))
    sign = (-1) ** (sum(p.r) + 3)
    return total * (sign * omega)


def literal_sigma_sum(p: ZetaParams, point: dict) -> Fraction:
    """The permutation-indexed sum evaluated at a point of FORMAL_VARS.

    Runs over all of S_r1 x S_r2 x S_r3, so only practical for small ranks.
    """
    _require_exact(p)
    Y = point["Y"]
    alphas = [a.values for a in p.alpha]
    acc = Fraction(0)
    for sig in product(*(permutations(range(ri)) for ri in p.r)):
        term = Fraction(1)
        for a in product(*(range(ri) for ri in p.r)):
            if a == (0, 0, 0):
                continue
            term *= 1 - Y / (alphas[0][sig[0][a[0]]] * alphas[1][sig[1][a[1]]] * alphas[2][sig[2][a[2]]])
        for i in range(3):
            al = alphas[i]
            j = sig[i][0]
            term /= factorial(p.r[i] - 1)
            for b in range(1, p.r[i]):
                term *= 1 - point[f"Y{i + 1}"] / al[sig[i][b]]
            for ap in p.alpha_prime[i].values:
                term *= 1 - al[j] * ap * point[f"X{i + 1}"]
            term /= al[j] * prod((al[j] - al[n] for n in range(len(al)) if n != j), start=Fraction(1))
        acc += term
    omega = prod((v for a in alphas for v in a), start=Fraction(1))
    return (-1) ** (sum(p.r) + 3) * omega * acc


def y_lattice(r) -> int:
    """D = lcm(r_i - 2): the quotient lives in q^{-s/D}, q^{-s_i/D}."""
    return lcm(*(ri - 2 for ri in r))


def y_variables(p: ZetaParams) -> tuple:
    """y0..y3, plus a formal Q = q^{1/2} when q is not a rational square."""
    ys = ("y0", "y1", "y2", "y3")
    return ys if isinstance(sqrt_exact(Fraction(p.q)), Fraction) else ("Q",) + ys


def _y_images(p: ZetaParams, names: tuple) -> tuple[list, list]:
    D = y_lattice(p.r)
    has_q = names[0] == "Q"
    off = 1 if has_q else 0
    root = None if has_q else sqrt_exact(Fraction(p.q))

    def mono(y: dict) -> tuple:
        e = [0] * len(names)
        if has_q:
            e[0] = -1
        for k, v in y.items():
            e[off + k] += v
        return tuple(e)

    images = [mono({0: D})] + [mono({i + 1: D}) for i in range(3)]
    for i in range(3):
        w = D // (p.r[i] - 2)
        images.append(mono({0: w, i + 1: w, (i + 1) % 3 + 1: -w, (i + 2) % 3 + 1: -w}))
    weights = None if has_q else [1 / root] * len(FORMAL_VARS)
    return images, weights


def to_y_variables(f: SparseLaurent, p: ZetaParams) -> SparseLaurent:
    names = y_variables(p)
    images, weights = _y_images(p, names)
    return f.substitute_monomials(images, names, weights)


def _all_but_one(factors: list, one: SparseLaurent) -> list:
    """prod_{t != j} factors[t] for every j, via prefix and suffix products."""
    n = len(factors)
    pre = [one] * (n + 1)
    for t in range(n):
        pre[t + 1] = pre[t] * factors[t]
    suf = [one] * (n + 1)
    for t in range(n - 1, -1, -1):
        suf[t] = suf[t + 1] * factors[t]
    return [pre[j] * suf[j + 1] for j in range(n)]


def gcd_quotient(p: ZetaParams) -> SparseLaurent:
    """The normalized quotient as a Laurent polynomial in y0..y3 (and Q if needed).

    The j-terms are put over the common cofactor denominator K and the sum
    becomes one rational function in the y-variables; after normalizing,
    its denominator has to be a monomial, which is the polynomiality
    certificate.
    """
    _require_exact(p)
    names = y_variables(p)
    images, weights = _y_images(p, names)
    one = SparseLaurent.constant(FORMAL_VARS, 1)
    alphas = [a.values for a in p.alpha]
    triples = list(product(*(range(ri) for ri in p.r)))
    a_parts = _all_but_one([_linear("Y", 1 / (alphas[0][t[0]] * alphas[1][t[1]] * alphas[2][t[2]]))
                            for t in triples], one)
    side, den = {}, {}
    for i in range(3):
        al = alphas[i]
        for j in range(p.r[i]):
            b = prod((_linear(f"Y{i + 1}", 1 / al[n]) for n in range(p.r[i]) if n != j), start=one)
            side[i, j] = b * prod((_linear(f"X{i + 1}", al[j] * ap) for ap in p.alpha_prime[i].values),
                                  start=one)
            den[i, j] = al[j] * prod((al[j] - al[n] for n in range(len(al)) if n != j), start=Fraction(1))
    K = prod(den.values(), start=Fraction(1))
    num = SparseLaurent(FORMAL_VARS)
    for idx, j in enumerate(triples):
        dj = den[0, j[0]] * den[1, j[1]] * den[2, j[2]]
        num = num + a_parts[idx] * side[0, j[0]] * side[1, j[1]] * side[2, j[2]] * (K / dj)
    omega = prod((v for a in alphas for v in a), start=Fraction(1))
    num = num * ((-1) ** (sum(p.r) + 3) * omega)
    total = rf_normalize(RationalFunction(num.substitute_monomials(images, names, weights),
                                          SparseLaurent.constant(names, K)))
    if not total.denominator.is_monomial():
        raise PolynomialityError(f"denominator {total.denominator!r} is not a monomial")
    (e, c), = total.denominator.terms.items()
    return total.numerator.shift(tuple(-x for x in e)) / c


def constant_term(f: SparseLaurent):
    return f.coefficient((0,) * len(f.variables))


def _first_difference(a: SparseLaurent, b: SparseLaurent):
    diff = a - b
    if diff.is_zero():
        return None
    e = min(diff.terms, key=lambda x: (sum(x), tuple(-v for v in x)))
    return dict(zip(a.variables, e)), b.coefficient(e), a.coefficient(e)


def verify_rationality(p: ZetaParams, N: int = 6, perturb: bool = False,
                       name: str | None = None) -> VerificationReport:
    """E times the seven Euler products must reproduce the direct series through total degree N."""
    t0 = time.perf_counter()
    name = name or f"rationality r={p.r} N={N}"
    flags = [] if p.compatible else ["compatibility-off"]
    try:
        E = formal_quotient(p)
        quotient = gcd_quotient(p)
        if perturb:
            E = E + SparseLaurent.var(FORMAL_VARS, "Y")
        lhs = truncated_product([E] + full_l_series(p, N), N)
        direct = znaive_direct_series(p, N)
        closed = znaive_closed_series(p, N)
    except (SingularDenominatorError, PolynomialityError, ValueError) as exc:
        return error_report(name, exc, t0, flags)
    details = {"quotient_terms": len(quotient.terms), "quotient_constant": constant_term(quotient),
               "variables": list(quotient.variables), "D": y_lattice(p.r)}
    checked = len(direct.terms)
    for label, other in (("closed", closed), ("quotient", lhs)):
        bad = _first_difference(other, direct)
        if bad is not None:
            index, expected, actual = bad
            details["failed"] = label
            return VerificationReport(name, "fail", checked, mismatch(index, expected, actual),
                                      time.perf_counter() - t0, flags, details)
    if constant_term(quotient) != 1:
        return VerificationReport(name, "fail", checked, mismatch("constant term", 1, constant_term(quotient)),
                                  time.perf_counter() - t0, flags, details)
    return VerificationReport(name, "pass", checked, None, time.perf_counter() - t0, flags, details)


__all__ = ["PolynomialityError", "formal_quotient", "literal_sigma_sum", "gcd_quotient", "verify_rationality",
           "y_lattice", "y_variables", "to_y_variables", "constant_term"]
