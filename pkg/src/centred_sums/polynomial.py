"""Dense univariate polynomials in n with exact integer coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numeric_core import Rational, binomial

__all__ = ["IntPolynomial", "taylor_shift", "rational_mul"]


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def taylor_shift(coeffs: Sequence[Rational], c: Rational) -> list:
    """Coefficients of p(n + c) given those of p(n), ascending order."""
    d = len(coeffs)
    out: list = [0] * d
    for i, a in enumerate(coeffs):
        if a == 0:
            continue
        # a * (n + c)^i = a * sum_j C(i,j) c^(i-j) n^j
        cp = 1
        for j in range(i, -1, -1):
            out[j] += a * binomial(i, j) * cp
            cp *= c
    return out


def rational_mul(a: Sequence[Rational], b: Sequence[Rational]) -> list:
    if not a or not b:
        return []
    out: list = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class IntPolynomial:
    """Polynomial in n, coefficients ascending by degree, no trailing zeros."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[int] = ()):
        cs = []
        for c in coefficients:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError(f"coefficient must be int, got {type(c).__name__}")
            cs.append(c)
        self._c = tuple(_trim(cs))

    @classmethod
    def from_rational(cls, coefficients: Iterable[Rational]) -> "IntPolynomial":
        """Build from rational coefficients that must all clear to integers."""
        cs = [Fraction(c) for c in coefficients]
        bad = [c for c in cs if c.denominator != 1]
        if bad:
            raise ArithmeticError(f"coefficients failed to clear to integers: {bad}")
        return cls(c.numerator for c in cs)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def coefficient(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, x: Rational) -> Rational:
        acc: Rational = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == IntPolynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)})"

    def __str__(self) -> str:
        return self.render()

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        o = _coerce(other)
        n = max(len(self._c), len(o._c))
        return IntPolynomial(self.coefficient(i) + o.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._c)

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self._c)
        return IntPolynomial(rational_mul(self._c, _coerce(other)._c))

    __rmul__ = __mul__

    def shift(self, c: int) -> "IntPolynomial":
        """p(n + c)."""
        return IntPolynomial(taylor_shift(self._c, c))

    def divide_by_n(self) -> "IntPolynomial":
        if self.coefficient(0) != 0:
            raise ArithmeticError("constant term is nonzero; n does not divide")
        return IntPolynomial(self._c[1:])

    def render(self, factor_n: bool = True, var: str = "n") -> str:
        """Human form, e.g. ``n(6n^2 - 8n + 3)`` or ``4n - 3``."""
        if not self._c:
            return "0"
        if factor_n and self._c[0] == 0 and self.degree >= 1:
            inner = self.divide_by_n()
            if inner.degree == 0:
                c = inner.leading
                return var if c == 1 else ("-" + var if c == -1 else f"{c}{var}")
            return f"{var}({inner.render(factor_n=False, var=var)})"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                pw = var if k == 1 else f"{var}^{k}"
                body = pw if mag == 1 else f"{mag}{pw}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def _coerce(x: "IntPolynomial | int") -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot combine IntPolynomial with {type(x).__name__}")
