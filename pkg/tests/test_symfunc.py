import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trizeta.exactalg import half_power, sqrt_exact
from trizeta.symfunc import (DominantWeight, Partition, SatakePoint, SingularDenominatorError, classify_weight,
                             delta_borel, monomial_expansion_schur, partitions_up_to, schur_jacobi_trudi,
                             schur_value, trace_wedge, whittaker_value)
from trizeta.suites import schur_oracles
from trizeta.zeta.params import random_exact_point

X = SatakePoint.exact([2, 3, 5])


def brute_partitions(total, length):
    out = set()

    def rec(prefix, left, cap):
        out.add(tuple(prefix))
        if len(prefix) == length:
            return
        for p in range(1, min(left, cap) + 1):
            rec(prefix + [p], left - p, p)

    rec([], total, total)
    return out


def test_partitions_examples():
    assert partitions_up_to(0, 4) == [Partition(())]
    assert set(partitions_up_to(2, 2)) == {(), (1,), (2,), (1, 1)}
    assert partitions_up_to(2, 2)[0] == ()


def test_partition_count_6_3():
    # 1 + 1 + 2 + 3 + 4 + 5 + 7 partitions of 0..6 into at most 3 parts
    ps = partitions_up_to(6, 3)
    assert len(ps) == len(set(ps)) == len(brute_partitions(6, 3)) == 23


def test_partitions_graded_order():
    ps = partitions_up_to(5, 3)
    sizes = [p.size for p in ps]
    assert sizes == sorted(sizes)


def test_dominant_weight():
    assert DominantWeight([2, 0, -1]) == (2, 0, -1)
    with pytest.raises(ValueError):
        DominantWeight([0, 1])
    assert classify_weight([0, 1]) is None


def test_schur_examples():
    assert schur_value((0, 0, 0), X) == 1
    assert schur_value((1, 0, 0), X) == 10
    assert schur_value((0, 0, -1), X) == F(31, 30)
    assert schur_value((0, 1, 0), X) == 0


def test_jacobi_trudi_examples():
    x = SatakePoint.exact([2, 3])
    assert schur_jacobi_trudi((), x) == 1
    assert schur_jacobi_trudi((2,), x) == 19
    assert schur_jacobi_trudi((1, 1), x) == 6


def test_repeated_coordinates_raise():
    with pytest.raises(SingularDenominatorError):
        schur_value((1, 0, 0), SatakePoint.exact([2, 2, 5]))


def test_bialternant_vs_jacobi_trudi():
    rng = random.Random(3)
    for _ in range(20):
        x = random_exact_point(rng, 3)
        for lam in partitions_up_to(6, 3):
            assert schur_value(lam.padded(3), x) == schur_jacobi_trudi(lam, x)


@settings(max_examples=40)
@given(st.integers(-2, 2), st.sampled_from(partitions_up_to(4, 3)), st.randoms(use_true_random=False))
def test_shift_covariance(c, lam, rng):
    x = random_exact_point(rng, 3)
    lam = lam.padded(3)
    assert schur_value(tuple(v + c for v in lam), x) == x.product() ** c * schur_value(lam, x)


@settings(max_examples=60)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_non_dominant_is_zero(lam):
    if lam != sorted(lam, reverse=True):
        assert schur_value(lam, X) == 0


def test_tableau_oracle():
    for lam in partitions_up_to(4, 3):
        assert monomial_expansion_schur(lam.padded(3), X) == schur_value(lam.padded(3), X)


def test_schur_oracle_suite():
    x = random_exact_point(random.Random(0), 4)
    assert schur_oracles(4, 5, x).passed
    bad = schur_oracles(4, 5, x, perturb=True)
    assert not bad.passed and bad.witness["expected"] != bad.witness["actual"]


def test_tempered_schur_matches_tableaux():
    u = SatakePoint.tempered([1j, -1 + 0j, (1 + 1j) / abs(1 + 1j)])
    for lam in partitions_up_to(4, 3):
        assert abs(schur_value(lam.padded(3), u) - monomial_expansion_schur(lam.padded(3), u)) < 1e-12


def test_trace_wedge():
    assert trace_wedge(0, X) == 1
    assert trace_wedge(3, X) == 30
    assert trace_wedge(1, X) == 10
    assert trace_wedge(4, X) == 0


def test_delta_borel():
    assert delta_borel((0, 0, 0), 5) == 1
    assert delta_borel((1, 0, 0), 5) == F(1, 25)
    assert delta_borel((1, 1), 7) == 1


def test_whittaker_examples():
    a = SatakePoint.exact([F(2), F(-1, 3)])
    assert whittaker_value((0, 0), a, 5) == 1
    assert whittaker_value((1, 0), a, 5) == half_power(5, -1) * (a[0] + a[1])
    assert whittaker_value((1, 0), a, 25) == F(1, 5) * (a[0] + a[1])
    assert whittaker_value((1, 1), a, 5) == a[0] * a[1]
    assert whittaker_value((0, 1), a, 5) == 0
    assert whittaker_value((1, 0), a, 5) * sqrt_exact(5) == a[0] + a[1]
