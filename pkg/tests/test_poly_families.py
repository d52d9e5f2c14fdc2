from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from centred_sums.closed_forms import lagrange_interpolate
from centred_sums.direct_eval import u_direct
from centred_sums.poly_families import (
    FamilyId, classic_sequences, family_poly, pbar_at_zero_from_egf, q_at_half_integer,
    qbar_from_q, secant_numbers, special_values, table1_closed_form, u_from_family,
)
from centred_sums.polynomial import IntPolynomial, taylor_shift
from centred_sums.reference_tables import PRINTED_POLYNOMIALS

FAMILIES = list(FamilyId)


@pytest.mark.parametrize("fam", ["P", "Q", "Pbar", "Qbar"])
@pytest.mark.parametrize("r", range(6))
def test_printed_polynomials(fam, r):
    assert list(family_poly(fam, r).coefficients) == PRINTED_POLYNOMIALS[fam][r]


@given(st.integers(min_value=0, max_value=14), st.integers(min_value=0, max_value=40))
def test_family_route_matches_direct(r, n):
    assert u_from_family(r, n) == u_direct(r, n)


@pytest.mark.parametrize("fam", [FamilyId.P, FamilyId.Q])
@pytest.mark.parametrize("r", range(1, 12))
def test_divisible_by_n(fam, r):
    p = family_poly(fam, r)
    assert p.coefficient(0) == 0
    assert p.divide_by_n() * IntPolynomial([0, 1]) == p


@pytest.mark.parametrize("fam", FAMILIES)
@pytest.mark.parametrize("r", range(9))
def test_special_values(fam, r):
    assert special_values(fam, r) == table1_closed_form(fam, r)


def test_secant_numbers_against_zigzag():
    # Euler zigzag numbers by the boustrophedon triangle; even entries are secants
    row, zig = [1], [1]
    for _ in range(16):
        new = [0]
        for v in reversed(row):
            new.append(new[-1] + v)
        row = new
        zig.append(row[-1])
    assert secant_numbers(8) == zig[0::2][:8]
    assert secant_numbers(5) == [1, 1, 5, 61, 1385]


def test_classic_sequences():
    assert classic_sequences("genocchi", 5) == [-1, 1, -3, 17, -155]
    assert classic_sequences("reduced-tangent", 5) == [1, 1, 4, 34, 496]
    assert pbar_at_zero_from_egf(9) == classic_sequences("pbar-at-zero", 9)


@pytest.mark.parametrize("r", range(9))
def test_qbar_at_one(r):
    assert family_poly(FamilyId.QBAR, r)(1) == (3 ** (2 * r) + 3) // 4


@pytest.mark.parametrize("r", range(11))
def test_qbar_from_q(r):
    assert qbar_from_q(r) == family_poly(FamilyId.QBAR, r)


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=30))
def test_q_at_half_integer(r, n):
    assert q_at_half_integer(r, n) == u_direct(2 * r, n)


@given(st.integers(min_value=0, max_value=7), st.integers(min_value=-20, max_value=20))
def test_interpolation_recovers_family(r, x):
    p = family_poly(FamilyId.Q, r)
    nodes = list(range(p.degree + 1))
    assert lagrange_interpolate(nodes, [p(m) for m in nodes], x) == p(x)


@given(st.lists(st.integers(-50, 50), max_size=8), st.integers(-5, 5), st.integers(-10, 10))
def test_taylor_shift(coeffs, c, x):
    p = IntPolynomial(coeffs)
    assert IntPolynomial(taylor_shift(coeffs, c))(x) == p(x + c)
    assert p.shift(c)(x) == p(x + c)


def test_render():
    assert family_poly(FamilyId.P, 1).render() == "n"


def test_from_rational_rejects_fractions():
    with pytest.raises(ArithmeticError):
        IntPolynomial.from_rational([Fraction(1, 2)])
