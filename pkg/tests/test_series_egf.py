from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from centred_sums.power_series import PowerSeries, series_elementary
from centred_sums.series_egf import (
    series_self_test, verify_carlitz_egf, verify_egf_even, verify_egf_odd_even,
    verify_egf_odd_odd, verify_egf_s_even, verify_sinh_cosh_identity,
)

series = st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)), min_size=1, max_size=8)


@given(series, series)
def test_product_is_commutative_and_truncated(a, b):
    p, q = PowerSeries(a, 6), PowerSeries(b, 6)
    assert (p * q).coefficients == (q * p).coefficients
    assert (p * q).order == 6


@given(series)
def test_reciprocal(a):
    if a[0] == 0:
        return
    p = PowerSeries(a, 7)
    assert (p * p.reciprocal()).coefficients == PowerSeries.constant(1, 7).coefficients


@given(series, st.integers(0, 5))
def test_power_matches_repeated_product(a, k):
    p = PowerSeries(a, 6)
    expected = PowerSeries.constant(1, 6)
    for _ in range(k):
        expected = expected * p
    assert (p**k).coefficients == expected.coefficients


def test_parity_of_elementary_series():
    assert series_elementary("cosh", Fraction(1, 2), 12).is_even()
    assert series_elementary("sinh", 3, 12).is_odd()
    assert series_elementary("sec", 1, 12).is_even()


def test_index_beyond_order():
    with pytest.raises(IndexError):
        PowerSeries.constant(1, 3)[4]


def test_self_test():
    assert series_self_test(20).ok


@pytest.mark.parametrize("n", range(0, 9))
def test_even_egfs(n):
    assert verify_egf_even(n, 20).ok
    assert verify_egf_s_even(n, 20).ok
    assert verify_sinh_cosh_identity(n, 20).ok


@pytest.mark.parametrize("n", range(1, 9))
def test_odd_egfs(n):
    rep = verify_egf_odd_even(n, 20)
    assert rep.ok and rep.notes["k_le_min_r_n_suffices"]
    assert verify_egf_odd_odd(n, 20).ok


def test_odd_odd_known_coefficients():
    # n = 1 gives U_r(1) = 2^(1-r); n = 2 gives U_r(3) = 2*(3/2)^r + 6*(1/2)^r
    one = {c.index: c.rhs for c in verify_egf_odd_odd(1, 5).comparisons}
    assert one[3] == Fraction(1, 4) and one[5] == Fraction(1, 16)
    two = {c.index: c.rhs for c in verify_egf_odd_odd(2, 3).comparisons}
    assert two[1] == 6 and two[3] == Fraction(15, 2)
    assert two[2] == 0


def test_sinh_cosh_truncation_note():
    assert verify_sinh_cosh_identity(4, 20).notes["k_max"] == 2
    assert verify_sinh_cosh_identity(5, 20).notes["k_max"] == 10


@pytest.mark.parametrize("x,y", [(1, 1), (Fraction(1, 2), 3), (Fraction(-2, 5), Fraction(7, 3))])
def test_carlitz_egf(x, y):
    assert verify_carlitz_egf(x, y, 20).ok


def test_carlitz_egf_rejects_zero():
    with pytest.raises(ValueError):
        verify_carlitz_egf(0, 1, 10)


def test_odd_order_rejected():
    with pytest.raises(ValueError):
        verify_egf_even(3, 7)
