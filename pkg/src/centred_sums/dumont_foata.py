"""Dumont-Foata polynomials F_r(x, y, z) and their links to U_r(n).

F_1 = 1 and F_{r+1}(x,y,z) = (x+z)(y+z) F_r(x,y,z+1) - z^2 F_r(x,y,z).
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .numeric_core import Rational, binomial, factorial, pochhammer
from .poly_families import FamilyId
from .polynomial import IntPolynomial, rational_mul

__all__ = [
    "TriPolynomial",
    "df_poly",
    "df_eval",
    "df_carlitz",
    "family_from_df",
    "u_from_df",
    "CarlitzDomainError",
]

Exponent = tuple[int, int, int]


class CarlitzDomainError(ValueError):
    pass


class TriPolynomial:
    """Sparse polynomial in x, y, z: exponent triple -> nonzero int."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        self._terms: dict[Exponent, int] = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, c: int) -> "TriPolynomial":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, index: int) -> "TriPolynomial":
        e = [0, 0, 0]
        e[index] = 1
        return cls({tuple(e): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"TriPolynomial({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: "TriPolynomial") -> "TriPolynomial":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return TriPolynomial(out)

    def __neg__(self) -> "TriPolynomial":
        return TriPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "TriPolynomial") -> "TriPolynomial":
        return self + (-other)

    def __mul__(self, other: "TriPolynomial | int") -> "TriPolynomial":
        if isinstance(other, int):
            return TriPolynomial({e: c * other for e, c in self._terms.items()})
        out: dict[Exponent, int] = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + u * v
        return TriPolynomial(out)

    __rmul__ = __mul__

    def shift_z(self, h: int = 1) -> "TriPolynomial":
        """Substitute z -> z + h."""
        out: dict[Exponent, int] = {}
        for (i, j, k), c in self._terms.items():
            hp = 1
            for m in range(k, -1, -1):
                e = (i, j, m)
                out[e] = out.get(e, 0) + c * binomial(k, m) * hp
                hp *= h
        return TriPolynomial(out)

    def permute(self, perm: tuple[int, int, int]) -> "TriPolynomial":
        """Variable i of the result is variable perm[i] of self."""
        out = {}
        for e, c in self._terms.items():
            out[(e[perm[0]], e[perm[1]], e[perm[2]])] = c
        return TriPolynomial(out)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=-1)

    def __call__(self, x: Rational, y: Rational, z: Rational) -> Rational:
        acc: Rational = 0
        for (i, j, k), c in self._terms.items():
            acc += c * x**i * y**j * z**k
        return acc

    def substitute_linear(self, x: tuple[Rational, Rational], y: tuple[Rational, Rational],
                          z: tuple[Rational, Rational]) -> list:
        """Replace each variable v by (a + b n) and return coefficients in n, ascending."""
        lin = [[Fraction(a), Fraction(b)] for a, b in (x, y, z)]
        powers: list[list[list]] = [[[Fraction(1)]] for _ in range(3)]

        def pw(v: int, k: int) -> list:
            cache = powers[v]
            while len(cache) <= k:
                cache.append(rational_mul(cache[-1], lin[v]))
            return cache[k]

        out: list = []
        for (i, j, k), c in self._terms.items():
            term = rational_mul(rational_mul(pw(0, i), pw(1, j)), pw(2, k))
            if len(term) > len(out):
                out += [Fraction(0)] * (len(term) - len(out))
            for d, t in enumerate(term):
                out[d] += c * t
        while out and out[-1] == 0:
            out.pop()
        return out

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            factors = []
            for name, k in zip("xyz", e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


_X, _Y, _Z = TriPolynomial.var(0), TriPolynomial.var(1), TriPolynomial.var(2)


@lru_cache(maxsize=None)
def df_poly(r: int) -> TriPolynomial:
    if r < 1:
        raise ValueError(f"F_r is only defined for r >= 1, got r={r}")
    if r == 1:
        return TriPolynomial.constant(1)
    prev = df_poly(r - 1)
    return (_X + _Z) * (_Y + _Z) * prev.shift_z(1) - _Z * _Z * prev


def df_eval(r: int, x: Rational, y: Rational, z: Rational) -> Fraction:
    return Fraction(df_poly(r)(Fraction(x), Fraction(y), Fraction(z)))


def df_carlitz(r: int, x: Rational, y: Rational, z: Rational) -> Fraction:
    """Carlitz's double sum for F_r(x, y, z); needs (2z)_{2r-1} != 0."""
    if r < 1:
        raise ValueError(f"F_r is only defined for r >= 1, got r={r}")
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    for i in range(2 * r - 1):
        if 2 * z + i == 0:
            raise CarlitzDomainError(
                f"(2z)_{2 * r - 1} vanishes at z={z}: factor 2z+{i} = 0; "
                "the explicit formula needs (2z)_(2r-1) != 0"
            )
    total = Fraction(0)
    for k in range(r):
        num_k = pochhammer(x + z, k) * pochhammer(y + z, k)
        if num_k == 0:
            continue
        for j in range(k + 1):
            term = num_k * (z + j) ** (2 * r - 1)
            term /= factorial(j) * factorial(k - j) * pochhammer(2 * z + j, k + 1)
            total += -term if j % 2 else term
    return 2 * (-1) ** (r - 1) * total


def _lin(a: Rational, b: Rational = 0) -> tuple[Fraction, Fraction]:
    return (Fraction(a), Fraction(b))


HALF = Fraction(1, 2)


def family_from_df(which: FamilyId | str, r: int) -> IntPolynomial:
    """The family member of order r written through F, built symbolically in n."""
    which = FamilyId(which)
    if r < 1:
        raise ValueError(f"the Dumont-Foata expressions need r >= 1, got r={r}")
    if which is FamilyId.P:
        body = df_poly(r).substitute_linear(_lin(0, -1), _lin(1), _lin(1))
        coeffs = rational_mul(body, [0, (-1) ** (r - 1)])
    elif which is FamilyId.PBAR:
        body = df_poly(r + 1).substitute_linear(_lin(HALF, -1), _lin(HALF), _lin(HALF))
        coeffs = [c * (-4) ** r for c in body]
    elif which is FamilyId.Q:
        body = df_poly(r).substitute_linear(_lin(0, -1), _lin(HALF), _lin(1))
        coeffs = rational_mul(body, [0, (-2) ** (r - 1)])
    else:
        body = df_poly(r).substitute_linear(_lin(-HALF, -1), _lin(HALF), _lin(1))
        scale = (-1) ** (r - 1) * Fraction(2) ** (2 * r - 1)
        coeffs = rational_mul(body, [HALF * scale, scale])
    # integrality is guaranteed; a leftover fraction means a bug upstream
    return IntPolynomial.from_rational(coeffs)


def u_from_df(r: int, n: int) -> Fraction:
    """U_r(n) through a single Dumont-Foata evaluation.

    Even order 2s (s >= 1), any n >= 1:
        U_{2s}(n) = 2^{n-2} n (-1)^{s-1} F_s(-n/2, 1/2, 1)
    Odd order, even argument 2m (s >= 1):
        U_{2s+1}(2m) = m^2 (-1)^{s-1} F_s(-m, 1, 1) C(2m, m)
    Odd order, odd argument 2m-1 (s >= 0):
        U_{2s+1}(2m-1) = (1/2) m (-1)^s F_{s+1}(1/2 - m, 1/2, 1/2) C(2m, m)
    """
    if n < 1:
        raise ValueError(f"the Dumont-Foata route needs argument n >= 1, got n={n}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got r={r}")
    s, odd = divmod(r, 2)
    if not odd:
        if s < 1:
            raise ValueError("U_{2r}(n) via F_r(-n/2, 1/2, 1) is valid for r >= 1 only (order >= 2)")
        v = df_eval(s, Fraction(-n, 2), HALF, 1)
        return Fraction(2) ** (n - 2) * n * (-1) ** (s - 1) * v
    if n % 2 == 0:
        if s < 1:
            raise ValueError("U_{2r+1}(2n) via F_r(-n, 1, 1) is valid for r >= 1 only (order >= 3)")
        m = n // 2
        return m * m * (-1) ** (s - 1) * df_eval(s, -m, 1, 1) * binomial(2 * m, m)
    m = (n + 1) // 2
    return HALF * m * (-1) ** s * df_eval(s + 1, HALF - m, HALF, HALF) * binomial(2 * m, m)


def symmetric_under_permutations(p: TriPolynomial) -> bool:
    return all(p.permute(perm) == p for perm in itertools.permutations(range(3)))


def carlitz_sample_points(count: int, seed: int, zs: Iterable[Rational] = (HALF, 1, Fraction(3, 2), 2)):
    """Deterministic random rational points (x, y, z) with z drawn from ``zs``."""
    rng = random.Random(seed)
    zs = [Fraction(v) for v in zs]
    pts = []
    for _ in range(count):
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        y = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        pts.append((x, y, rng.choice(zs)))
    return pts
