"""Coefficient-exact checks of the exponential generating functions.

Every check expands both sides as truncated power series and compares them
coefficient by coefficient; there are no tolerances anywhere. Reports keep
both sides so a mismatch can be diagnosed from the report alone.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .direct_eval import s_direct, u_direct
from .dumont_foata import df_eval
from .numeric_core import Rational, binomial, pochhammer
from .power_series import PowerSeries, poly_in_series, series_elementary

__all__ = [
    "EgfComparison",
    "EgfReport",
    "series_elementary",
    "verify_egf_even",
    "verify_egf_s_even",
    "verify_sinh_cosh_identity",
    "verify_egf_odd_even",
    "verify_egf_odd_odd",
    "verify_carlitz_egf",
    "series_self_test",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class EgfComparison:
    index: int
    lhs: Fraction
    rhs: Fraction

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class EgfReport:
    name: str
    params: dict
    comparisons: list[EgfComparison] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def mismatches(self) -> list[EgfComparison]:
        return [c for c in self.comparisons if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _two_sinh_half(order: int) -> PowerSeries:
    return series_elementary("sinh", HALF, order) * 2


def verify_egf_even(n: int, order: int) -> EgfReport:
    """2^n cosh^n(z/2) against U_{2r}(n) (index = 2r, egf-normalised)."""
    if order < 0 or order % 2:
        raise ValueError(f"order must be even and >= 0, got {order}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    rhs = series_elementary("cosh", HALF, order) ** n * (2**n)
    rep = EgfReport("egf-even", {"n": n, "order": order})
    for r2 in range(0, order + 1, 2):
        rep.comparisons.append(EgfComparison(r2, u_direct(r2, n), rhs.egf_coefficient(r2)))
    return rep


def verify_egf_s_even(n: int, order: int) -> EgfReport:
    """2^{2n} cosh^{2n}(z/2) against S_{2r}(n)."""
    if order < 0 or order % 2:
        raise ValueError(f"order must be even and >= 0, got {order}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    rhs = series_elementary("cosh", HALF, order) ** (2 * n) * (4**n)
    rep = EgfReport("egf-s-even", {"n": n, "order": order})
    for r2 in range(0, order + 1, 2):
        rep.comparisons.append(EgfComparison(r2, s_direct(r2, n), rhs.egf_coefficient(r2)))
    return rep


def verify_sinh_cosh_identity(n: int, order: int) -> EgfReport:
    """cosh^n z = sum_k (-1)^k (1/2)_k (-n/2)_k (2 sinh z)^{2k} / (2k)!.

    Terms with 2k > order cannot reach the truncation; for even n the sum
    also stops at k = n/2 where (-n/2)_k vanishes.
    """
    if n < 0 or order < 0:
        raise ValueError("n and order must be >= 0")
    lhs = series_elementary("cosh", 1, order) ** n
    k_max = order // 2
    if n % 2 == 0:
        k_max = min(k_max, n // 2)
    s = (series_elementary("sinh", 1, order) * 2) ** 2
    coeffs = []
    for k in range(k_max + 1):
        c = (-1) ** k * pochhammer(HALF, k) * pochhammer(Fraction(-n, 2), k)
        coeffs.append(Fraction(c) / math.factorial(2 * k))
    rhs = poly_in_series(coeffs, s)
    rep = EgfReport("sinh-cosh", {"n": n, "order": order}, notes={"k_max": k_max})
    for i in range(order + 1):
        rep.comparisons.append(EgfComparison(i, lhs[i], rhs[i]))
    return rep


def verify_egf_odd_even(n: int, order: int) -> EgfReport:
    """n C(2n,n) sum_{k<=n} 4^k C(n,k)/C(2k,k) sinh^{2k}(z/2) against U_{2r+1}(2n).

    Also checks that coefficient 2r already comes out right when only the
    terms k <= min(r, n) are kept.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    sh2 = series_elementary("sinh", HALF, order) ** 2
    pre = n * binomial(2 * n, n)
    weights = [Fraction(4**k * binomial(n, k), binomial(2 * k, k)) * pre for k in range(n + 1)]
    rhs = poly_in_series(weights, sh2)
    rep = EgfReport("egf-odd-even", {"n": n, "order": order})
    partial_ok = True
    for r2 in range(0, order + 1, 2):
        r = r2 // 2
        rep.comparisons.append(EgfComparison(r2, u_direct(2 * r + 1, 2 * n), rhs.egf_coefficient(r2)))
        partial = poly_in_series(weights[: min(r, n) + 1], sh2)
        partial_ok &= partial.egf_coefficient(r2) == rhs.egf_coefficient(r2)
    rep.notes["k_le_min_r_n_suffices"] = partial_ok
    if not partial_ok:
        rep.comparisons.append(EgfComparison(-1, Fraction(1), Fraction(0)))
    return rep


def verify_egf_odd_odd(n: int, order: int) -> EgfReport:
    """Double sum of sinh((j + 1/2) z) terms against U_{2r+1}(2n-1).

    Odd coefficients are compared with U values; even coefficients must be 0.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    rhs = PowerSeries.constant(0, order)
    for k in range(n):
        for j in range(k + 1):
            w = Fraction((-1) ** (k - j) * binomial(n - 1, k) * binomial(2 * k, k - j),
                         binomial(2 * k, k) * (j + k + 1))
            rhs = rhs + series_elementary("sinh", j + HALF, order) * w
    rhs = rhs * (n * binomial(2 * n, n))
    rep = EgfReport("egf-odd-odd", {"n": n, "order": order})
    for i in range(order + 1):
        lhs = u_direct(i, 2 * n - 1) if i % 2 else Fraction(0)
        rep.comparisons.append(EgfComparison(i, lhs, rhs.egf_coefficient(i)))
    return rep


def verify_carlitz_egf(x: Rational, y: Rational, order: int) -> EgfReport:
    """sum_{r>=1} (-1)^r F_r(x,y,1) z^{2r}/(2r)! against
    (1/(xy)) sum_{k>=1} (-1)^k (x)_k (y)_k (2 sinh(z/2))^{2k} / (2k)!."""
    x, y = Fraction(x), Fraction(y)
    if x == 0 or y == 0:
        raise ValueError("the Carlitz egf has a 1/(xy) prefactor; x and y must be nonzero")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    lhs = [Fraction(0)] * (order + 1)
    for r in range(1, order // 2 + 1):
        lhs[2 * r] = (-1) ** r * df_eval(r, x, y, 1) / math.factorial(2 * r)
    s = _two_sinh_half(order) ** 2
    coeffs = [Fraction(0)]
    for k in range(1, order // 2 + 1):
        coeffs.append((-1) ** k * pochhammer(x, k) * pochhammer(y, k) / Fraction(math.factorial(2 * k)))
    rhs = poly_in_series(coeffs, s) * (1 / (x * y))
    rep = EgfReport("carlitz-egf", {"x": str(x), "y": str(y), "order": order})
    for i in range(order + 1):
        rep.comparisons.append(EgfComparison(i, lhs[i], rhs[i]))
    return rep


def series_self_test(order: int = 20) -> EgfReport:
    """cosh^2 - sinh^2 = 1 at z/2 and exp(z) exp(-z) = 1."""
    rep = EgfReport("series-self-test", {"order": order})
    ch = series_elementary("cosh", HALF, order)
    sh = series_elementary("sinh", HALF, order)
    a = ch * ch - sh * sh
    b = series_elementary("exp", 1, order) * series_elementary("exp", -1, order)
    for i in range(order + 1):
        one = Fraction(int(i == 0))
        rep.comparisons.append(EgfComparison(i, one, a[i]))
        rep.comparisons.append(EgfComparison(i, one, b[i]))
    return rep
