"""Definitional evaluation of U_r(n) and S_r(n), and a random-walk estimate.

These are the reference values everything else is checked against, so they
stay deliberately naive: one pass over the defining sum.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numeric_core import binomial

__all__ = [
    "Method",
    "SumValue",
    "u_direct",
    "u_direct_halfrange",
    "s_direct",
    "walk_moment_mc",
    "MonteCarloEstimate",
]


class Method(enum.Enum):
    DIRECT = "direct"
    RECURRENCE = "recurrence"
    POLY_FAMILY = "family"
    CARLITZ = "carlitz"
    LAGRANGE = "lagrange"
    GUO_ZENG = "gz"
    EGF = "egf"


@dataclass(frozen=True)
class SumValue:
    """An exact U_r(n) or S_r(n) value tagged with how it was obtained."""

    r: int
    n: int
    value: Fraction
    method: Method
    kind: str = "U"

    def __post_init__(self) -> None:
        v = Fraction(self.value)
        object.__setattr__(self, "value", v)
        if v < 0:
            raise ValueError(f"negative centred sum {v} for r={self.r}, n={self.n}")
        if (1 << self.r) % v.denominator:
            raise ValueError(f"denominator of {v} does not divide 2^{self.r}")


def u_direct(r: int, n: int) -> Fraction:
    """U_r(n) = sum_k C(n,k) |n/2 - k|^r, with 0^0 = 1 and U_r(n) = 0 for n < 0."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if n < 0:
        return Fraction(0)
    # |n/2 - k|^r == |n - 2k|^r / 2^r; keep the sum integral until the end.
    total = 0
    for k in range(n + 1):
        total += binomial(n, k) * abs(n - 2 * k) ** r
    return Fraction(total, 1 << r)


def u_direct_halfrange(r: int, n: int) -> Fraction:
    """U_r(n) = 2 sum_{k < n/2} C(n,k) (n/2 - k)^r, valid for r > 0."""
    if r < 1:
        raise ValueError(f"the half-range sum needs r >= 1, got r={r}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = 0
    k = 0
    while 2 * k < n:
        total += binomial(n, k) * (n - 2 * k) ** r
        k += 1
    return Fraction(2 * total, 1 << r)


def s_direct(r: int, n: int) -> Fraction:
    """S_r(n) = sum_k C(2n,k) |n-k|^r."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if n < 0:
        return Fraction(0)
    total = 0
    for k in range(2 * n + 1):
        total += binomial(2 * n, k) * abs(n - k) ** r
    return Fraction(total)


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    samples: int

    def within(self, exact: float, k: float = 5.0) -> bool:
        if self.stderr == 0.0:
            return self.mean == exact
        return abs(self.mean - exact) <= k * self.stderr


def walk_moment_mc(r: int, n: int, samples: int, seed: int) -> MonteCarloEstimate:
    """Estimate E|n/2 - K|^r for K ~ Binomial(n, 1/2), i.e. U_r(n) / 2^n.

    K is the number of +1 steps of an n-step symmetric Bernoulli walk. Draws
    come from numpy's PCG64 bit generator seeded with ``seed`` feeding
    ``Generator.binomial``, so a fixed seed reproduces the same estimate.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if r < 0 or n < 0:
        raise ValueError("r and n must be >= 0")
    if r == 0:
        return MonteCarloEstimate(1.0, 0.0, samples)
    rng = np.random.Generator(np.random.PCG64(seed))
    k = rng.binomial(n, 0.5, size=samples)
    x = np.abs(n / 2.0 - k) ** r
    mean = float(x.mean())
    std = float(x.std(ddof=1)) if samples > 1 else 0.0
    return MonteCarloEstimate(mean, std / math.sqrt(samples), samples)
