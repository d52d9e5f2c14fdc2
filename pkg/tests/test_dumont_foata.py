import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from centred_sums.direct_eval import u_direct
from centred_sums.dumont_foata import (
    CarlitzDomainError, TriPolynomial, carlitz_sample_points, df_carlitz, df_eval, df_poly,
    family_from_df, symmetric_under_permutations, u_from_df,
)
from centred_sums.closed_forms import df_applies
from centred_sums.poly_families import FamilyId, family_poly, secant_numbers

rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))


def test_small_polynomials():
    assert df_poly(1) == TriPolynomial.constant(1)
    assert df_poly(2).render() == "x*y + x*z + y*z"


def test_value_at_ones():
    # F_3(1,1,1) from the recurrence; also obtained by Carlitz's sum
    assert df_eval(3, 1, 1, 1) == 17
    assert df_carlitz(3, 1, 1, 1) == 17


@pytest.mark.parametrize("r", range(1, 8))
def test_symmetry_and_shape(r):
    p = df_poly(r)
    assert symmetric_under_permutations(p)
    for perm in itertools.permutations(range(3)):
        assert p.permute(perm) == p
    assert all(c > 0 for c in p.terms.values())
    assert all(p.degree_in(i) == r - 1 for i in range(3))


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=6), rationals, rationals,
       st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]))
def test_carlitz_matches_recurrence(r, x, y, z):
    assert df_carlitz(r, x, y, z) == df_eval(r, x, y, z)


def test_carlitz_domain():
    with pytest.raises(CarlitzDomainError):
        df_carlitz(3, 1, 1, 0)
    with pytest.raises(CarlitzDomainError):
        df_carlitz(3, 1, 1, Fraction(-1, 2))


def test_sample_points_reproducible():
    assert carlitz_sample_points(10, 5) == carlitz_sample_points(10, 5)


@pytest.mark.parametrize("r", range(9))
def test_value_at_halves(r):
    h = Fraction(1, 2)
    assert df_eval(r + 1, h, h, h) == Fraction((2 * r + 1) * secant_numbers(r + 1)[r], 4**r)


@pytest.mark.parametrize("fam", list(FamilyId))
@pytest.mark.parametrize("r", range(1, 9))
def test_families_from_df(fam, r):
    assert family_from_df(fam, r) == family_poly(fam, r)


@pytest.mark.parametrize("order", range(0, 14))
@pytest.mark.parametrize("arg", range(0, 25))
def test_df_route(order, arg):
    if df_applies(order, arg):
        assert u_from_df(order, arg) == u_direct(order, arg)
    else:
        with pytest.raises(ValueError):
            u_from_df(order, arg)


@given(st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-5, 5), max_size=5),
       st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), st.integers(-5, 5), max_size=5),
       rationals, rationals, rationals)
def test_tripolynomial_ring(a, b, x, y, z):
    p, q = TriPolynomial(a), TriPolynomial(b)
    assert (p * q)(x, y, z) == p(x, y, z) * q(x, y, z)
    assert (p + q)(x, y, z) == p(x, y, z) + q(x, y, z)
    assert (p - p) == TriPolynomial()
    assert p.shift_z(1)(x, y, z) == p(x, y, z + 1)
