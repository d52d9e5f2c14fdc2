"""Exact integer/rational primitives shared by every evaluator.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and immutable, and ``Fraction`` normalises to
lowest terms with a positive denominator on construction.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "binomial",
    "pochhammer",
    "factorial",
    "power",
    "as_fraction",
    "is_dyadic",
    "dyadic_log2",
    "format_rational",
    "parse_rational",
]

Rational = Union[int, Fraction]


def as_fraction(x: Rational | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial needs k >= 0, got {k}")
    return math.factorial(k)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, zero outside 0 <= k <= n.

    Negative upper index is rejected rather than extended.
    """
    if n < 0:
        raise ValueError(f"binomial is only defined here for n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(x: Rational, k: int) -> Fraction | int:
    """Rising factorial x(x+1)...(x+k-1); empty product is 1."""
    if k < 0:
        raise ValueError(f"pochhammer needs k >= 0, got {k}")
    acc: Rational = 1
    for i in range(k):
        acc *= x + i
        if acc == 0:
            return 0
    return acc


def power(base: Rational, exponent: int) -> Rational:
    # 0**0 == 1 in Python for int and Fraction alike; kept explicit since the
    # convention is load-bearing for U_0.
    if exponent == 0:
        return 1
    return base**exponent


def is_dyadic(q: Rational) -> bool:
    d = as_fraction(q).denominator
    return d & (d - 1) == 0


def dyadic_log2(q: Rational) -> int:
    """Exponent e with denominator(q) == 2**e; raises for non-dyadic q."""
    d = as_fraction(q).denominator
    if d & (d - 1):
        raise ValueError(f"{q} is not a dyadic rational")
    return d.bit_length() - 1


def format_rational(q: Rational) -> str:
    """``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
