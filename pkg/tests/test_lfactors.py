import random
from fractions import Fraction as F

import pytest

from trizeta.exactalg import RationalFunction, SparseLaurent, TruncatedSeries
from trizeta.lfactors import DivergenceError, LFactorKind, l_numeric, l_rational, l_series
from trizeta.symfunc import SatakePoint
from trizeta.zeta.params import random_exact_point

E = SatakePoint.exact
VT = ("T",)
T = SparseLaurent.var(VT, "T")
ONE = SparseLaurent.constant(VT, 1)


def test_series_examples():
    a, b = F(2, 3), F(7, 5)
    assert l_series(LFactorKind.standard(E([a])), 2).coeffs == (1, a, a * a)
    rs = l_series(LFactorKind.rankin_selberg(E([a, b]), E([F(-3)])), 3)
    assert rs[1] == a * -3 + b * -3
    ones = [SatakePoint.exact([1, 1])] * 3
    assert l_series(LFactorKind.triple(*ones), 1)[1] == 8


def test_rational_examples():
    assert l_rational(LFactorKind.standard(E([2]))) == RationalFunction(ONE, 1 - T * 2)
    f = l_rational(LFactorKind.standard(E([3, F(1, 3)])))
    assert f == RationalFunction(ONE, (1 - T * 3) * (1 - T / 3))
    g = l_rational(LFactorKind.rankin_selberg(E([2, 3]), E([5])))
    assert g == RationalFunction(ONE, (1 - T * 10) * (1 - T * 15))


def test_numeric_examples():
    assert abs(l_numeric(LFactorKind.standard(SatakePoint.tempered([1 + 0j])), 5, 1) - 1.25) < 1e-14
    assert abs(l_numeric(LFactorKind.standard(SatakePoint.tempered([1 + 0j, 1 + 0j])), 4, 0.5) - 4) < 1e-13
    unit = SatakePoint.tempered([1 + 0j] * 3)
    val = l_numeric(LFactorKind.triple(unit, unit, unit), 5, 2)
    assert abs(val - (1 - 5 ** -2) ** -27) < 1e-12


def test_numeric_divergence():
    with pytest.raises(DivergenceError):
        l_numeric(LFactorKind.standard(SatakePoint.tempered([1 + 0j])), 5, 0)


def test_arity_checked():
    with pytest.raises(ValueError):
        LFactorKind("triple", (E([1, 2]),))


def test_series_rational_consistency_and_degree():
    rng = random.Random(5)
    for k in range(30):
        r = 3 + k % 3
        a, ap = random_exact_point(rng, r), random_exact_point(rng, r - 2)
        for kind, deg in ((LFactorKind.standard(a), r), (LFactorKind.rankin_selberg(a, ap), r * (r - 2))):
            N = 10 if k < 10 else 6
            rf = l_rational(kind)
            assert rf.to_series(N) == l_series(kind, N)
            assert rf.denominator.total_degree_range()[1] == deg
    trip = LFactorKind.triple(*(random_exact_point(rng, n) for n in (3, 2, 2)))
    assert l_rational(trip).denominator.total_degree_range()[1] == 12
    assert l_rational(trip).to_series(5) == l_series(trip, 5)


def test_multiplicativity():
    rng = random.Random(6)
    a, b = random_exact_point(rng, 3), random_exact_point(rng, 2)
    joined = E(list(a.values) + list(b.values))
    lhs = l_series(LFactorKind.standard(joined), 8)
    rhs = l_series(LFactorKind.standard(a), 8) * l_series(LFactorKind.standard(b), 8)
    assert lhs == rhs
    assert isinstance(lhs, TruncatedSeries) and lhs.order == 8
