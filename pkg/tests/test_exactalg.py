import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trizeta.exactalg import (BitSizeExceeded, MatrixQ, QuadExt, RationalFunction, SparseLaurent,
                              TruncatedSeries, det_exact, half_power, kernel_basis, poly_divmod, rank_exact,
                              rf_normalize, series_inverse, series_mul, set_max_bits, solve_exact, sqrt_exact,
                              truncated_product, vandermonde)

VS = ("x", "y", "z")


def laplace(rows):
    if not rows:
        return F(1)
    return sum((-1) ** j * rows[0][j] * laplace([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(len(rows)) if rows[0][j])


def T(coeffs, N=None):
    return TruncatedSeries.from_coeffs([F(c) for c in coeffs], len(coeffs) - 1 if N is None else N)


# determinants and linear algebra

def test_det_examples():
    assert det_exact(MatrixQ.identity(3)) == 1
    assert det_exact(MatrixQ.from_rows([[0, 1], [1, 0]])) == -1
    assert det_exact(vandermonde([2, 3, 5])) == 6


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det_exact(MatrixQ.zeros(2, 3))


def test_det_matches_cofactor_expansion():
    rng = random.Random(0)
    for _ in range(240):
        n = rng.randint(1, 4)
        rows = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        assert det_exact(MatrixQ.from_rows(rows)) == laplace(rows)


def test_rank_examples():
    assert rank_exact(MatrixQ.zeros(4, 8)) == 0
    assert rank_exact(MatrixQ.identity(8)) == 8
    assert rank_exact(MatrixQ.from_rows([[1, 2, 3], [1, 2, 3]])) == 1


def test_kernel_examples():
    assert kernel_basis(MatrixQ.identity(5)) == []
    assert kernel_basis(MatrixQ.from_rows([[1, -1]])) == [(1, 1)]


def test_rank_nullity_and_kernel():
    rng = random.Random(1)
    for _ in range(100):
        m, n = rng.randint(1, 5), rng.randint(1, 6)
        a = MatrixQ.from_rows([[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(m)])
        ker = kernel_basis(a)
        assert rank_exact(a) + len(ker) == n
        for v in ker:
            assert all(x == 0 for x in (a @ MatrixQ.from_rows([[c] for c in v])).entries)


def test_solve_exact():
    a = MatrixQ.from_rows([[2, 1], [1, 3]])
    assert solve_exact(a, [3, 5]) == (F(4, 5), F(7, 5))
    assert solve_exact(MatrixQ.from_rows([[1, 1], [1, 1]]), [1, 2]) is None


def test_matrix_rejects_floats():
    with pytest.raises(TypeError):
        MatrixQ.from_rows([[0.5]])


# series

def test_series_examples():
    assert series_mul(T([1, 1, 0]), T([1, -1, 0]), 2).coeffs == (1, 0, -1)
    geo = TruncatedSeries.geometric(F(1), 5)
    assert series_mul(geo, T([1, -1], 5), 5) == TruncatedSeries.one(5)
    a, b = F(2, 3), F(-5, 7)
    prod2 = series_mul(TruncatedSeries.geometric(a, 2), TruncatedSeries.geometric(b, 2), 2)
    assert prod2[2] == a * a + a * b + b * b


def test_series_variable_mismatch():
    with pytest.raises(ValueError):
        series_mul(T([1, 1]), TruncatedSeries("U", (F(1), F(1))), 1)


def test_series_never_reports_beyond_order():
    s = T([1, 2, 3])
    with pytest.raises(IndexError):
        s[3]
    assert (s * s).order == 2


@given(st.lists(st.fractions(max_denominator=9).filter(lambda c: abs(c) < 10), min_size=1, max_size=8))
def test_series_inverse(cs):
    if cs[0] == 0:
        cs[0] = F(1)
    f = T(cs)
    assert f * series_inverse(f) == TruncatedSeries.one(f.order)


def test_series_numeric_domain():
    f = TruncatedSeries("T", (1 + 0j, 0.5j, 0.25 + 0j))
    g = f * series_inverse(f)
    assert abs(g[0] - 1) < 1e-15 and abs(g[1]) < 1e-15 and abs(g[2]) < 1e-15


# Laurent polynomials

laurent_terms = st.dictionaries(
    st.tuples(*(st.integers(-2, 2) for _ in VS)),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=4)


@settings(max_examples=120)
@given(laurent_terms, laurent_terms, laurent_terms)
def test_laurent_ring_axioms(a, b, c):
    a, b, c = (SparseLaurent(VS, t) for t in (a, b, c))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert (a - a).is_zero()


def test_laurent_no_stored_zeros():
    p = SparseLaurent(VS, {(1, 0, 0): 0, (0, 0, -1): F(2)})
    assert list(p.terms) == [(0, 0, -1)]
    with pytest.raises(ValueError):
        SparseLaurent(VS, {(1, 0): 1})


def test_laurent_substitution_and_evaluate():
    x = SparseLaurent.var(("x",), "x")
    p = (1 - x) * (1 + x * 3)
    q = p.substitute_monomials([(2, -1)], ("u", "v"), [F(1, 2)])
    assert q.evaluate({"u": F(3), "v": F(5)}) == p.evaluate({"x": F(1, 2) * 9 / 5})


def test_truncated_product_drops_high_degree():
    x, y = SparseLaurent.var(("x", "y"), "x"), SparseLaurent.var(("x", "y"), "y")
    full = (1 + x) * (1 + y) * (1 + x * y)
    assert truncated_product([1 + x, 1 + y, 1 + x * y], 2) == full.truncate(2)


def test_poly_divmod():
    x = SparseLaurent.var(("x",), "x")
    q, r = poly_divmod(x * x - 1, x - 1)
    assert q == x + 1 and r.is_zero()


# rational functions

def test_rf_normalize_examples():
    vs = ("T",)
    t = SparseLaurent.var(vs, "T")
    one = SparseLaurent.constant(vs, 1)
    f = rf_normalize(RationalFunction(t * t - 1, t - 1))
    assert f.numerator == t + 1 and f.denominator == one
    z = rf_normalize(RationalFunction(SparseLaurent(vs), t * t + 3))
    assert z.numerator.is_zero() and z.denominator == one
    h = rf_normalize(RationalFunction(t * 2, SparseLaurent.constant(vs, 4)))
    assert h.numerator == t / 2 and h.denominator == one


def test_rf_zero_denominator():
    vs = ("T",)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(SparseLaurent.constant(vs, 1), SparseLaurent(vs))


def test_rf_equality_and_series():
    vs = ("T",)
    t = SparseLaurent.var(vs, "T")
    f = RationalFunction(SparseLaurent.constant(vs, 1), 1 - t * F(1, 3))
    assert f.to_series(4) == TruncatedSeries.geometric(F(1, 3), 4)
    assert f == RationalFunction(t + 1, (1 - t * F(1, 3)) * (t + 1))


# Q(sqrt d) and the bit guard

def test_quadratic_extension():
    r5 = sqrt_exact(5)
    assert isinstance(r5, QuadExt) and r5 * r5 == 5
    assert sqrt_exact(F(25, 4)) == F(5, 2)
    assert half_power(5, 3) == 5 * r5
    assert (1 + r5) / (1 + r5) == 1
    assert abs(float(r5) - 5 ** 0.5) < 1e-15


def test_bit_guard():
    try:
        set_max_bits(16)
        with pytest.raises(BitSizeExceeded):
            det_exact(MatrixQ.from_rows([[2 ** 20, 0], [0, 2 ** 20]]))
    finally:
        set_max_bits(None)
    assert det_exact(MatrixQ.from_rows([[2 ** 20, 0], [0, 2 ** 20]])) == 2 ** 40
