import math

import pytest

from centred_sums import asymptotics as asy

NS = [50 * 2**i for i in range(6)]


@pytest.mark.parametrize("r", [1, 3, 4, 5, 6])
def test_error_halves_per_doubling(r):
    errs = [x.rel_error for x in asy.asymptotic_error_scan(r, NS)]
    lo, hi = asy.ERROR_RATIO_WINDOW
    for a, b in zip(errs, errs[1:]):
        assert b < a
        assert lo <= b / a <= hi


@pytest.mark.parametrize("r", sorted(asy.EXACT_ORDERS))
def test_exact_orders(r):
    assert max(x.rel_error for x in asy.asymptotic_error_scan(r, NS)) < asy.EXACT_ORDER_TOLERANCE


def test_first_order_error_size():
    # U_1(n) ~ leading term * (1 + 1/(4n) + ...)
    rep = asy.asymptotic_error_scan(1, [50])[0]
    assert rep.rel_error == pytest.approx(1 / 200, rel=0.01)


@pytest.mark.parametrize("r", range(4))
def test_odd_even_leading(r):
    e, a = asy.odd_even_leading_log(r, 200)
    assert abs(math.expm1(e - a)) < asy.ODD_EVEN_LEADING_BOUND_AT_200


def test_scan_validates_input():
    with pytest.raises(ValueError):
        asy.asymptotic_error_scan(2, [100, 50])
    with pytest.raises(ValueError):
        asy.u_asymptotic_log(1, 0)
