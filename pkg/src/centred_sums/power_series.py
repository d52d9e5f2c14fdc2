"""Truncated formal power series with exact rational coefficients."""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric_core import Rational

__all__ = ["PowerSeries", "Elementary", "series_elementary"]


class PowerSeries:
    """sum_{k=0}^{order} c_k z^k, every coefficient exact.

    Products and powers are truncated at ``min`` of the operands' orders, so
    every reported coefficient is a true coefficient of the full series.
    """

    __slots__ = ("_c", "order")

    def __init__(self, coefficients: Iterable[Rational], order: int):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        cs = [Fraction(c) for c in coefficients][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self._c = tuple(cs)
        self.order = order

    @classmethod
    def constant(cls, c: Rational, order: int) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int, scale: Rational = 1) -> "PowerSeries":
        return cls([0, scale], order)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient {k} is beyond truncation order {self.order}")
        return self._c[k]

    def egf_coefficient(self, k: int) -> Fraction:
        """k! * [z^k], the sequence term when read as an egf."""
        return self[k] * math.factorial(k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self._c]}, order={self.order})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return PowerSeries(self._c, order)

    def _align(self, other: "PowerSeries | Rational") -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other: "PowerSeries | Rational") -> "PowerSeries":
        o = self._align(other)
        order = min(self.order, o.order)
        return PowerSeries((a + b for a, b in zip(self._c, o._c)), order)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-c for c in self._c), self.order)

    def __sub__(self, other: "PowerSeries | Rational") -> "PowerSeries":
        return self + (-self._align(other))

    def __rsub__(self, other: Rational) -> "PowerSeries":
        return self._align(other) - self

    def __mul__(self, other: "PowerSeries | Rational") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            f = Fraction(other)
            return PowerSeries((c * f for c in self._c), self.order)
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        a, b = self._c, other._c
        for i in range(order + 1):
            if a[i] == 0:
                continue
            ai = a[i]
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return PowerSeries(out, order)

    __rmul__ = __mul__

    def __truediv__(self, other: "PowerSeries | Rational") -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "PowerSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"series power needs an integer k >= 0, got {k!r}")
        result = PowerSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def reciprocal(self) -> "PowerSeries":
        c0 = self._c[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no reciprocal")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / c0
        for k in range(1, self.order + 1):
            s = sum((self._c[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
            out[k] = -s / c0
        return PowerSeries(out, self.order)

    def is_even(self) -> bool:
        return all(c == 0 for c in self._c[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self._c[0::2])


class Elementary(enum.Enum):
    EXP = "exp"
    COSH = "cosh"
    SINH = "sinh"
    COS = "cos"
    SEC = "sec"


def series_elementary(kind: Elementary | str, scale: Rational, order: int) -> PowerSeries:
    """Maclaurin series of f(scale * z) to the given order."""
    kind = Elementary(kind)
    scale = Fraction(scale)
    if kind is Elementary.SEC:
        return series_elementary(Elementary.COS, scale, order).reciprocal()
    out = []
    sp = Fraction(1)
    for k in range(order + 1):
        term = sp / math.factorial(k)
        if kind is Elementary.EXP:
            out.append(term)
        elif kind is Elementary.COSH:
            out.append(term if k % 2 == 0 else Fraction(0))
        elif kind is Elementary.SINH:
            out.append(term if k % 2 == 1 else Fraction(0))
        else:  # COS
            out.append(term * (-1) ** (k // 2) if k % 2 == 0 else Fraction(0))
        sp *= scale
    return PowerSeries(out, order)


def sinh_linear(a: Rational, order: int) -> PowerSeries:
    """sinh(a z) expanded directly, used for sums of sinh((j + 1/2) z)."""
    return series_elementary(Elementary.SINH, a, order)


def poly_in_series(coeffs: Sequence[Rational], s: PowerSeries) -> PowerSeries:
    """sum_k coeffs[k] * s^k by Horner."""
    acc = PowerSeries.constant(0, s.order)
    for c in reversed(coeffs):
        acc = acc * s + c
    return acc
