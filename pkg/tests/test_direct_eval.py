from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from centred_sums.direct_eval import SumValue, Method, s_direct, u_direct, u_direct_halfrange, walk_moment_mc
from centred_sums.numeric_core import is_dyadic

orders = st.integers(min_value=0, max_value=12)
args = st.integers(min_value=0, max_value=40)


@pytest.mark.parametrize("r", range(0, 6))
@pytest.mark.parametrize("n", range(0, 11))
def test_matches_walk_enumeration(r, n, oracle):
    assert u_direct(r, n) == oracle(r, n)


def test_small_values():
    assert u_direct(2, 1) == Fraction(1, 2)
    assert u_direct(0, 5) == 32
    assert u_direct(1, 2) == 2
    assert u_direct(3, 4) == 24


@given(orders, args)
def test_denominator_divides_power_of_two(r, n):
    v = u_direct(r, n)
    assert v >= 0 and is_dyadic(v)
    assert (2**r) % v.denominator == 0


@given(st.integers(min_value=1, max_value=12), args)
def test_halfrange_agrees(r, n):
    assert u_direct_halfrange(r, n) == u_direct(r, n)


@given(orders, st.integers(min_value=0, max_value=20))
def test_s_is_u_at_double(r, n):
    assert s_direct(r, n) == u_direct(r, 2 * n)


def test_negative_argument_gives_zero():
    assert u_direct(0, -5) == 0


def test_sumvalue_validates():
    SumValue(2, 1, Fraction(1, 2), Method.DIRECT)
    with pytest.raises(ValueError):
        SumValue(1, 1, Fraction(1, 4), Method.DIRECT)
    with pytest.raises(ValueError):
        SumValue(1, 1, Fraction(-1), Method.DIRECT)


def test_monte_carlo_is_reproducible():
    a = walk_moment_mc(2, 4, 20000, seed=7)
    b = walk_moment_mc(2, 4, 20000, seed=7)
    assert a == b
    assert a.within(float(u_direct(2, 4) / 16))
