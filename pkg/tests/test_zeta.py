import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trizeta.exactalg import SparseLaurent, half_power
from trizeta.symfunc import SatakePoint, SingularDenominatorError, schur_value
from trizeta.zeta import (FORMAL_VARS, CompatibilityError, ConeError, PolynomialityError, ZetaParams,
                          cauchy_check, cofactor_check, cofactor_check_symbolic, compare_direct_closed, cone_check,
                          eta_torus_value, exponents_CA, formal_quotient, full_l_numeric, gcd_quotient,
                          literal_sigma_sum, random_exact_params, random_tempered_params, rankin_lhs, rankin_rhs,
                          sample_cone_point, symbolic_s, tempered_scan, verify_rankin, verify_rationality,
                          znaive_closed, znaive_direct, znaive_direct_series)
from trizeta.zeta.params import InternalIdentityError, LinearForm, random_exact_point
from trizeta.zeta.rationality import constant_term, to_y_variables, y_lattice, y_variables

E = SatakePoint.exact


# exponents and the eta character

def test_exponents_examples():
    ca = exponents_CA((3, 3, 3), (1, 1, 1), 1)
    assert ca.C == (0, 0, 0) and ca.A == 1
    ca = exponents_CA((3, 3, 3), (0, 0, 0), 0)
    assert ca.C == (0, 0, 0) and ca.A == 0
    ca = exponents_CA((4, 3, 3), (2, 1, 1), 2)
    assert ca.C == (1, 0, 0) and ca.A == 1


def test_exponents_reject_small_rank():
    with pytest.raises(ValueError):
        exponents_CA((2, 3, 3), (1, 1, 1), 1)


def test_exponents_symbolic():
    s_vec, s = symbolic_s()
    for r in ((3, 3, 3), (4, 5, 3), (6, 4, 7)):
        ca = exponents_CA(r, s_vec, s)
        total = ca.A
        for i in range(3):
            total = total + ca.C[i] * F(r[i] - 2, 2)
        assert total == s


@settings(max_examples=100)
@given(st.tuples(*(st.integers(3, 7) for _ in range(3))),
       st.tuples(*(st.floats(-20, 20) for _ in range(4))))
def test_exponents_numeric(r, vals):
    ca = exponents_CA(r, [complex(v) for v in vals[:3]], complex(vals[3]))
    rebuilt = ca.A + sum(ca.C[i] * (r[i] - 2) / 2 for i in range(3))
    assert abs(rebuilt - vals[3]) < 1e-9 * (1 + abs(vals[3]))


def test_eta_examples():
    assert eta_torus_value((3, 3, 3), (1, 1, 1), 1, 0, (0, 0, 0), (0, 0, 0), 5) == 1
    assert eta_torus_value((3, 3, 3), (2, 2, 2), 2, 1, (0, 0, 0), (0, 0, 0), 5) == F(1, 25)
    assert eta_torus_value((3, 3, 3), (3, 1, 1), 3, 0, (1, 0, 0), (0, 0, 0), 5) == F(1, 125)


def test_eta_identity_random_exponents():
    rng = random.Random(11)
    s_vec, s = symbolic_s()
    for _ in range(200):
        r = tuple(rng.randint(3, 6) for _ in range(3))
        ell, k = rng.randint(0, 5), tuple(rng.randint(0, 5) for _ in range(3))
        t = tuple(rng.randint(-4, 4) for _ in range(3))
        e = eta_torus_value(r, s_vec, s, ell, k, t)
        assert isinstance(e, LinearForm)
        exact = tuple(F(rng.randint(1, 30), rng.randint(1, 4)) for _ in range(3)), F(rng.randint(1, 30))
        assert eta_torus_value(r, *exact, ell, k, t) == e.evaluate(*exact)


# cone

def test_cone_examples():
    # C_i = (3 + 3 - 3 - 3) / 1 = 0, so the C-condition fails
    assert cone_check((3, 3, 3), (3, 3, 3), 3, 1.0) is False
    assert cone_check((3, 3, 3), (3, 3, 3), 0, 1.0) is False
    base = ((F(1), F(1), F(1)), F(3, 2))
    assert not cone_check((3, 3, 3), *base)
    assert cone_check((3, 3, 3), tuple(20 * x for x in base[0]), 20 * base[1])
    with pytest.raises(ValueError):
        cone_check((3, 3, 3), (1, 1, 1), 1, margin=0)


def test_sampled_points_are_in_cone():
    rng = random.Random(2)
    for r in ((3, 3, 3), (4, 3, 5)):
        for _ in range(20):
            s_vec, s = sample_cone_point(rng, r, 1.0)
            assert cone_check(r, s_vec, s, 1.0)


# params

def test_params_compatibility():
    a = (E([2, 3, F(1, 6)]), E([2, 3, F(1, 6)]), E([2, 3, F(1, 6)]))
    ok = (E([1]),) * 3
    assert ZetaParams((3, 3, 3), 5, a, ok).compatible
    bad = (E([2]),) * 3
    with pytest.raises(CompatibilityError):
        ZetaParams((3, 3, 3), 5, a, bad)
    assert not ZetaParams((3, 3, 3), 5, a, bad, allow_incompatible=True).compatible
    with pytest.raises(ValueError):
        ZetaParams((3, 3, 3), 1, a, ok)


def test_random_params_are_compatible():
    rng = random.Random(4)
    for _ in range(10):
        assert random_exact_params(rng, (3, 4, 5)).compatible
        p = random_tempered_params(rng, (3, 4, 5))
        assert p.compatible and all(abs(abs(v) - 1) < 1e-12 for a in p.alpha for v in a)


# Rankin-Selberg lemma on the torus

def test_rankin_lhs_examples():
    a, ap = E([2, 3, F(1, 6)]), E([7])
    lhs = rankin_lhs(3, 0, a, ap, 3)
    assert lhs[0] == 1 and lhs[1] == (2 + 3 + F(1, 6)) * 7
    a4, ap4 = E([2, 3, 5, F(1, 30)]), E([7, F(1, 7)])
    c2 = rankin_lhs(4, 0, a4, ap4, 2)[2]
    assert c2 == (schur_value((2, 0, 0, 0), a4) * schur_value((2, 0), ap4)
                  + schur_value((1, 1, 0, 0), a4) * schur_value((1, 1), ap4))
    for ell in range(3):
        assert rankin_lhs(3, ell, a, ap, 0, q=5)[0] == half_power(5, -2 * ell) * schur_value((0, 0, -ell), a)


def test_rankin_rhs_examples():
    a, ap = E([2, 3, F(1, 6)]), E([7])
    assert rankin_rhs(3, 2, a, ap, 0, q=25)[0] == F(1, 25) ** 2 * schur_value((0, 0, -2), a)
    from trizeta.zeta.rankin import finite_part
    assert finite_part(3, 0, a, ap) == [1, 0]
    assert finite_part(3, 1, a, ap)[1] == -7


def test_verify_rankin_examples():
    assert verify_rankin(3, 0, E([2, 3, F(1, 6)]), E([7]), 8).passed
    assert verify_rankin(4, 1, E([2, 3, 5, F(1, 30)]), E([7, F(1, 7)]), 8, q=5).passed
    bad = verify_rankin(3, 0, E([2, 3, F(1, 6)]), E([7]), 8, perturb=True)
    assert not bad.passed and bad.witness["index"] == "1"


def test_rankin_singular():
    with pytest.raises(SingularDenominatorError):
        rankin_lhs(3, 0, E([2, 2, 3]), E([7]), 3)
    assert not verify_rankin(3, 0, E([2, 2, 3]), E([7]), 3).passed


def test_rankin_grid():
    rng = random.Random(42)
    for r in (3, 4, 5):
        for ell in (0, 1, 2):
            for _ in range(5):
                rep = verify_rankin(r, ell, random_exact_point(rng, r), random_exact_point(rng, r - 2), 8)
                assert rep.passed, rep.line()


def test_cofactor_examples():
    x, xp = E([2, 3, 5]), E([7])
    from trizeta.zeta.rankin import cofactor_sides
    lhs, rhs = cofactor_sides(3, 0, x, xp)
    assert lhs[0] == rhs[0] == 1
    assert cofactor_check(3, 2, x, xp).passed
    assert not cofactor_check(3, 0, E([2, 2, 3]), xp).passed
    assert cofactor_check(3, 0, E([2, 2, 3]), xp).witness["error"] == "SingularDenominatorError"


def test_cofactor_symbolic():
    for r in (3, 4, 5):
        for ell in range(4):
            assert cofactor_check_symbolic(r, ell).passed
    assert not cofactor_check_symbolic(3, 1, perturb=True).passed


def test_cauchy():
    rng = random.Random(9)
    for m in (1, 2, 3):
        rep = cauchy_check(m, random_exact_point(rng, m + 1), random_exact_point(rng, m), 6)
        assert rep.passed
    bad = cauchy_check(2, random_exact_point(rng, 3), random_exact_point(rng, 2), 6, perturb=True)
    assert not bad.passed and bad.witness["index"] == "1"


# theorem: direct vs closed

def test_znaive_large_s_close_to_one():
    p = random_tempered_params(random.Random(0), (3, 3, 3), 5.0, (40, 40, 40), 80)
    v = znaive_closed(p, tol=1e-12)
    assert abs(v.value - 1) < 1e-6


def test_znaive_trivial_box():
    p = random_tempered_params(random.Random(1), (3, 3, 3), 5.0, (6, 6, 6), 9)
    assert znaive_direct(p, 0, 0, 0).value == 1
    with pytest.raises(ConeError):
        znaive_direct(p.with_s((6, 6, 6), 6))


def test_direct_vs_closed_spec_point():
    p = random_tempered_params(random.Random(1), (3, 3, 3), 5.0, (6, 6, 6), 9)
    d, c = znaive_direct(p, tol=1e-10), znaive_closed(p, tol=1e-10)
    assert abs(d.value - c.value) <= d.bound + c.bound
    assert compare_direct_closed(p).passed
    assert not compare_direct_closed(p, perturb=True).passed


def test_closed_exact_partial_sum():
    p = random_exact_params(random.Random(3), (3, 3, 3))
    N = 4
    box = znaive_closed(p, "exact", ell_max=0, k_max=0, N=N)
    # only the L-factors survive: the n_i = 1 Schur values are non-dominant
    from trizeta.lfactors import LFactorKind, l_series
    expected = SparseLaurent.constant(FORMAL_VARS, 1)
    for i in range(3):
        idx = FORMAL_VARS.index(f"X{i + 1}")
        coeffs = l_series(LFactorKind.rankin_selberg(p.alpha[i], p.alpha_prime[i]), N).coeffs
        terms = {tuple(n if j == idx else 0 for j in range(7)): c for n, c in enumerate(coeffs)}
        expected = expected * SparseLaurent(FORMAL_VARS, terms)
    assert box == expected


def test_theorem_numeric_exact_q():
    rng = random.Random(8)
    for q in (25, 5):
        s_vec, s = sample_cone_point(rng, (4, 3, 3), 1.0)
        assert compare_direct_closed(random_tempered_params(rng, (4, 3, 3), float(q), s_vec, s), tol=1e-8).passed


# rationality

@pytest.fixture(scope="module")
def exact333():
    return random_exact_params(random.Random(20), (3, 3, 3), q=5)


def test_quotient_matches_literal_permutation_sum(exact333):
    E_ = formal_quotient(exact333)
    pt = {v: F(k + 2, 7) for k, v in enumerate(FORMAL_VARS)}
    assert E_.evaluate(pt) == literal_sigma_sum(exact333, pt)


def test_gcd_quotient(exact333):
    g = gcd_quotient(exact333)
    assert g == to_y_variables(formal_quotient(exact333), exact333)
    assert constant_term(g) == 1
    assert y_variables(exact333)[0] == "Q" and y_lattice((4, 3, 5)) == 6


def test_gcd_quotient_square_q():
    p = random_exact_params(random.Random(21), (3, 3, 3), q=25)
    g = gcd_quotient(p)
    assert g.variables == ("y0", "y1", "y2", "y3") and constant_term(g) == 1


def test_gcd_quotient_symmetry(exact333):
    a = exact333.alpha[0].values
    swapped = exact333.replace_alpha(0, (a[2], a[0], a[1]))
    assert gcd_quotient(swapped) == gcd_quotient(exact333)


def test_quotient_singular():
    p = ZetaParams((3, 3, 3), 5, (E([2, 2, 2]),) * 3, (E([F(1, 8)]),) * 3)
    with pytest.raises(SingularDenominatorError):
        gcd_quotient(p)
    rep = verify_rationality(p, 2)
    assert not rep.passed and rep.witness["error"] == "SingularDenominatorError"
    assert issubclass(PolynomialityError, ArithmeticError)


def test_verify_rationality(exact333):
    assert verify_rationality(exact333, 4).passed
    bad = verify_rationality(exact333, 3, perturb=True)
    assert not bad.passed and bad.witness["index"]["Y"] == "1"


def test_rationality_incompatible_flag():
    p = random_exact_params(random.Random(23), (3, 3, 3), compatible=False)
    rep = verify_rationality(p, 3)
    assert "compatibility-off" in rep.flags and rep.passed


def test_quotient_times_l_series_is_direct(exact333):
    from trizeta.exactalg import truncated_product
    from trizeta.zeta import full_l_series
    N = 3
    assert truncated_product([formal_quotient(exact333)] + full_l_series(exact333, N), N) == \
        znaive_direct_series(exact333, N)


# tempered asymptotic

def test_tempered_large_q():
    rng = random.Random(0)
    p = random_tempered_params(rng, (3, 3, 3), 1e4, (1.75, 1.75, 1.75), 3.0)
    R = znaive_direct(p, tol=1e-13, check_cone=False).value / full_l_numeric(p)
    assert abs(R - 1) <= 1e-3


def test_tempered_scan_small():
    rep = tempered_scan((3, 3, 3), [5, 7, 11, 13], 0.5, 10)
    assert rep.passed, rep.line()
    assert not tempered_scan((3, 3, 3), [5, 7, 11], 0.5, 2, perturb=True).passed


def test_tempered_scan_bad_eps():
    with pytest.raises(ValueError):
        tempered_scan((3, 3, 3), [5], 0, 1)


def test_internal_identity_error_type():
    assert issubclass(InternalIdentityError, AssertionError)
