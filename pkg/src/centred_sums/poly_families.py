"""The four integer polynomial families behind U_r(n).

For n >= 1:

    U_{2r+1}(2n)   = n P_r(n) C(2n, n)
    U_{2r+1}(2n-1) = 2^{-(2r+1)} n Pbar_r(n) C(2n, n)
    U_{2r}(2n)     = 2^{2n-r} Q_r(n)
    U_{2r}(2n+1)   = 2^{2n+1-2r} Qbar_r(n)

Each family is generated from the constant 1 by a two-term recurrence
``next(n) = A(n) p(n) - B(n) p(n-1)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .direct_eval import u_direct
from .numeric_core import binomial
from .polynomial import IntPolynomial, taylor_shift
from .power_series import PowerSeries, series_elementary

__all__ = [
    "FamilyId",
    "family_poly",
    "u_from_family",
    "q_at_half_integer",
    "qbar_from_q",
    "SpecialValues",
    "special_values",
    "table1_closed_form",
    "secant_numbers",
    "SequenceKind",
    "classic_sequences",
    "pbar_at_zero_from_egf",
]


class FamilyId(enum.Enum):
    P = "P"
    PBAR = "Pbar"
    Q = "Q"
    QBAR = "Qbar"


_N = IntPolynomial([0, 1])

# (A, B) in next(n) = A(n) p(n) - B(n) p(n-1)
_RECURRENCE = {
    FamilyId.P: (_N * _N, _N * (_N - 1)),
    FamilyId.PBAR: ((2 * _N - 1) * (2 * _N - 1), 4 * (_N - 1) * (_N - 1)),
    FamilyId.Q: (2 * _N * _N, _N * (2 * _N - 1)),
    FamilyId.QBAR: ((2 * _N + 1) * (2 * _N + 1), 2 * _N * (2 * _N + 1)),
}


@lru_cache(maxsize=None)
def family_poly(which: FamilyId | str, r: int) -> IntPolynomial:
    which = FamilyId(which)
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r == 0:
        return IntPolynomial([1])
    prev = family_poly(which, r - 1)
    a, b = _RECURRENCE[which]
    return a * prev - b * prev.shift(-1)


def u_from_family(r: int, n: int) -> Fraction:
    """U_r(n) rebuilt from whichever family matches the parities of r and n."""
    if r < 0 or n < 0:
        raise ValueError(f"r and n must be >= 0, got r={r}, n={n}")
    s, r_odd = divmod(r, 2)
    if r_odd:
        if n == 0:
            # odd-order reconstructions are stated for n >= 1 only
            return u_direct(r, 0)
        if n % 2 == 0:
            m = n // 2
            return Fraction(m * family_poly(FamilyId.P, s)(m) * binomial(2 * m, m))
        m = (n + 1) // 2
        return Fraction(m * family_poly(FamilyId.PBAR, s)(m) * binomial(2 * m, m), 1 << r)
    if n % 2 == 0:
        m = n // 2
        return Fraction(family_poly(FamilyId.Q, s)(m)) * Fraction(2) ** (2 * m - s)
    m = (n - 1) // 2
    return Fraction(family_poly(FamilyId.QBAR, s)(m)) * Fraction(2) ** (2 * m + 1 - 2 * s)


def q_at_half_integer(r: int, n: int) -> Fraction:
    """2^{n-r} Q_r(n/2), which is U_{2r}(n) for either parity of n."""
    if r < 0 or n < 0:
        raise ValueError(f"r and n must be >= 0, got r={r}, n={n}")
    return Fraction(2) ** (n - r) * Fraction(family_poly(FamilyId.Q, r)(Fraction(n, 2)))


def qbar_from_q(r: int) -> IntPolynomial:
    """2^r Q_r(m + 1/2) as a polynomial in m; equals Qbar_r(m)."""
    shifted = taylor_shift([Fraction(c) for c in family_poly(FamilyId.Q, r).coefficients], Fraction(1, 2))
    return IntPolynomial.from_rational(c * 2**r for c in shifted)


@dataclass(frozen=True)
class SpecialValues:
    at_zero: int
    at_one: int
    leading: int


def special_values(which: FamilyId | str, r: int) -> SpecialValues:
    p = family_poly(which, r)
    return SpecialValues(at_zero=p(0), at_one=p(1), leading=p.leading)


def table1_closed_form(which: FamilyId | str, r: int) -> SpecialValues:
    """Closed forms for the value at 0, value at 1 and leading coefficient."""
    which = FamilyId(which)
    f = math.factorial
    if which is FamilyId.P:
        return SpecialValues(int(r == 0), 1, f(r))
    if which is FamilyId.Q:
        return SpecialValues(int(r == 0), int(max(1, Fraction(2) ** (r - 1))), f(2 * r) // (2**r * f(r)))
    if which is FamilyId.PBAR:
        sec = secant_numbers(r + 1)[r]
        return SpecialValues((-1) ** r * (2 * r + 1) * sec, 1, 2 ** (2 * r) * f(r))
    return SpecialValues(1, (3 ** (2 * r) + 3) // 4, f(2 * r) // f(r))


def secant_numbers(count: int) -> list[int]:
    """S_0 .. S_{count-1} from the reciprocal of the cosine series."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    sec = series_elementary("sec", 1, 2 * (count - 1))
    out = []
    for r in range(count):
        v = sec.egf_coefficient(2 * r)
        assert v.denominator == 1
        out.append(v.numerator)
    return out


class SequenceKind(enum.Enum):
    GENOCCHI = "genocchi"
    REDUCED_TANGENT = "reduced-tangent"
    PBAR_AT_ZERO = "pbar-at-zero"


def classic_sequences(kind: SequenceKind | str, count: int) -> list[int]:
    """Classical sequences read off the families.

    Genocchi numbers are the constant terms of -P_r(n)/n and reduced tangent
    numbers those of (-1)^(r-1) Q_r(n)/n, both for r = 1..count. PBAR_AT_ZERO
    is Pbar_r(0) for r = 0..count-1, signs kept.
    """
    kind = SequenceKind(kind)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if kind is SequenceKind.GENOCCHI:
        return [-family_poly(FamilyId.P, r).coefficient(1) for r in range(1, count + 1)]
    if kind is SequenceKind.REDUCED_TANGENT:
        return [(-1) ** (r - 1) * family_poly(FamilyId.Q, r).coefficient(1) for r in range(1, count + 1)]
    return [family_poly(FamilyId.PBAR, r)(0) for r in range(count)]


def pbar_at_zero_from_egf(count: int) -> list[int]:
    """Odd egf coefficients of x / cosh x, an independent route to Pbar_r(0)."""
    order = 2 * count - 1
    x = PowerSeries.variable(order)
    f = x * series_elementary("cosh", 1, order).reciprocal()
    out = []
    for r in range(count):
        v = f.egf_coefficient(2 * r + 1)
        assert v.denominator == 1
        out.append(v.numerator)
    return out
