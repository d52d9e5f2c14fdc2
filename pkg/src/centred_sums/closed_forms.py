"""Explicit summation formulas for U_r(n) and S_r(n), plus the cross-method matrix.

Each formula is written out term by term with the index ranges it is stated
with, so a summand table can be inspected as well as the total. Parameters
(r, n) are the formula's own, not the order/argument of the U value it
produces; ``formulas_for`` maps an order/argument pair to the applicable
formulas.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .direct_eval import u_direct, u_direct_halfrange
from .dumont_foata import u_from_df
from .numeric_core import Rational, binomial, factorial, pochhammer
from .poly_families import u_from_family
from .recurrences import u_recurrence

__all__ = [
    "FormulaId",
    "FormulaDomainError",
    "u_closed",
    "summand_table",
    "formula_target",
    "formulas_for",
    "lagrange_interpolate",
    "cross_validate",
    "CrossValidationReport",
    "Cell",
]

HALF = Fraction(1, 2)


class FormulaDomainError(ValueError):
    pass


class FormulaId(enum.Enum):
    EVEN_A2 = "EvenA2"
    EVEN_B2 = "EvenB2"
    ODD_EVEN2 = "OddEven2"
    ODD_ODD2 = "OddOdd2"
    LAGRANGE_EVEN = "LagrangeEven"
    LAGRANGE_ODD_EVEN = "LagrangeOddEven"
    LAGRANGE_ODD_ODD = "LagrangeOddOdd"
    GZ_EVEN = "GZEven"
    GZ_ODD = "GZOdd"


# (min r, min n, what the formula evaluates)
_VALIDITY: dict[FormulaId, tuple[int, int, str]] = {
    FormulaId.EVEN_A2: (1, 1, "U_{2r}(n) for r >= 1, n >= 1"),
    FormulaId.EVEN_B2: (1, 1, "U_{2r}(n) for r >= 1, n >= 1"),
    FormulaId.ODD_EVEN2: (1, 1, "U_{2r+1}(2n) for r >= 1, n >= 1"),
    FormulaId.ODD_ODD2: (1, 1, "U_{2r-1}(2n-1) for r >= 1, n >= 1"),
    FormulaId.LAGRANGE_EVEN: (1, 1, "U_{2r}(n) for r >= 1, n >= 1"),
    FormulaId.LAGRANGE_ODD_EVEN: (1, 0, "U_{2r+1}(2n) for r >= 1, n >= 0"),
    FormulaId.LAGRANGE_ODD_ODD: (1, 1, "U_{2r-1}(2n-1) for r >= 1, n >= 1"),
    FormulaId.GZ_EVEN: (1, 0, "S_{2r}(n) for r >= 1, n >= 0"),
    FormulaId.GZ_ODD: (1, 0, "S_{2r-1}(n) for r >= 1, n >= 0"),
}


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _check(formula: FormulaId, r: int, n: int) -> None:
    r_min, n_min, text = _VALIDITY[formula]
    if r < r_min or n < n_min:
        raise FormulaDomainError(
            f"{formula.value} gives {text}; got r={r}, n={n}. Use u_direct outside this range."
        )


def _div(num: Rational, den: Rational, formula: FormulaId) -> Fraction:
    if den == 0:
        raise ArithmeticError(f"{formula.value}: vanishing denominator inside the stated range")
    return Fraction(num) / den


# Each generator yields (j, k, term) with the prefactor already applied.

def _even_a2(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.EVEN_A2
    pre = Fraction(2) ** (n + 1)
    for k in range(1, r + 1):
        poch = pochhammer(Fraction(-n, 2), k) * pochhammer(HALF, k)
        for j in range(1, k + 1):
            t = _div(_sign(j) * poch, factorial(k - j) * factorial(k + j), f) * j ** (2 * r)
            yield j, k, pre * t


def _even_b2(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.EVEN_B2
    pre = Fraction(2) ** n * n
    for k in range(1, r + 1):
        poch = pochhammer(Fraction(1 - n, 2), k - 1) * pochhammer(HALF, k)
        for j in range(1, k + 1):
            t = _div(_sign(j - 1) * poch, factorial(k + j - 1) * factorial(k - j), f)
            yield j, k, pre * t * (j - HALF) ** (2 * r - 1)


def _odd_even2(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.ODD_EVEN2
    pre = 2 * n * binomial(2 * n, n)
    for k in range(1, r + 1):
        poch = pochhammer(-n, k)
        for j in range(1, k + 1):
            t = _div(_sign(j) * poch, factorial(k - j) * pochhammer(k + 1, j), f) * j ** (2 * r)
            yield j, k, pre * t


def _odd_odd2(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.ODD_ODD2
    pre = binomial(2 * n, n)
    for k in range(1, r + 1):
        poch = pochhammer(-n, k)
        for j in range(1, k + 1):
            t = _div(_sign(j) * poch, factorial(k - j) * pochhammer(k, j), f)
            yield j, k, pre * t * (j - HALF) ** (2 * r - 1)


def _lagrange_even(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.LAGRANGE_EVEN
    pre = _sign(r) * Fraction(2) ** (n + 1)
    for k in range(1, r + 1):
        poch = (pochhammer(Fraction(-n, 2), k) * pochhammer(HALF, k)
                * pochhammer(Fraction(n, 2) - r, r - k))
        for j in range(1, k + 1):
            den = factorial(k + j) * factorial(k - j) * factorial(r - k)
            yield j, k, pre * _div(poch, den, f) * j ** (2 * r)


def _lagrange_odd_even(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.LAGRANGE_ODD_EVEN
    pre = 2 * n * binomial(2 * n, n) * _sign(r)
    for k in range(1, r + 1):
        poch = pochhammer(-n, k) * pochhammer(n - r, r - k)
        for j in range(1, k + 1):
            den = factorial(r - k) * factorial(k - j) * pochhammer(k, j + 1)
            yield j, k, pre * _div(poch, den, f) * j ** (2 * r + 1)


def _lagrange_odd_odd(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.LAGRANGE_ODD_ODD
    pre = _sign(r) * binomial(2 * n, n)
    for k in range(0, r + 1):
        poch = pochhammer(1 - n, k) * pochhammer(n - 1 - r, r - k)
        for j in range(0, k + 1):
            den = factorial(r - k) * factorial(k - j) * pochhammer(k + 2, j)
            yield j, k, pre * _div(poch, den, f) * (j + HALF) ** (2 * r - 1)


def _gz_even(r: int, n: int) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.GZ_EVEN
    for k in range(0, r):
        for j in range(0, k + 1):
            t = (Fraction(2) ** (2 * n - 2 * k - 1) * _sign(k - j) * binomial(2 * n, j)
                 * _div(pochhammer(2 * n - 2 * k, k - j), factorial(k - j), f)
                 * (n - j) ** (2 * r - 1))
            yield j, k, t


def _gz_odd(r: int, n: int, k_cap: int | None = None) -> Iterator[tuple[int, int, Fraction]]:
    f = FormulaId.GZ_ODD
    top = min(r - 1, n) if k_cap is None else k_cap
    for k in range(0, top + 1):
        # C(2n-2k, n-k) is zero once k > n; the upper index would go negative
        central = binomial(2 * n - 2 * k, n - k) if k <= n else 0
        for j in range(0, k + 1):
            t = (_sign(k - j) * central * binomial(2 * n, j)
                 * _div(pochhammer(2 * n - 2 * k, k - j), factorial(k - j), f)
                 * (n - j) ** (2 * r - 1))
            yield j, k, Fraction(t)


_TERMS: dict[FormulaId, Callable[[int, int], Iterator[tuple[int, int, Fraction]]]] = {
    FormulaId.EVEN_A2: _even_a2,
    FormulaId.EVEN_B2: _even_b2,
    FormulaId.ODD_EVEN2: _odd_even2,
    FormulaId.ODD_ODD2: _odd_odd2,
    FormulaId.LAGRANGE_EVEN: _lagrange_even,
    FormulaId.LAGRANGE_ODD_EVEN: _lagrange_odd_even,
    FormulaId.LAGRANGE_ODD_ODD: _lagrange_odd_odd,
    FormulaId.GZ_EVEN: _gz_even,
    FormulaId.GZ_ODD: _gz_odd,
}


def summand_table(formula: FormulaId | str, r: int, n: int) -> list[tuple[int, int, Fraction]]:
    """Every (j, k, term) of the formula's double sum, prefactor included."""
    formula = FormulaId(formula)
    _check(formula, r, n)
    return list(_TERMS[formula](r, n))


def u_closed(formula: FormulaId | str, r: int, n: int) -> Fraction:
    """Evaluate one explicit formula at its own parameters (r, n).

    GZEven/GZOdd return S values; the rest return U values. See
    ``formula_target`` for which order and argument each produces.
    """
    return sum((t for _, _, t in summand_table(formula, r, n)), Fraction(0))


def gz_odd_extended(r: int, n: int, k_cap: int) -> Fraction:
    """GZOdd with the k range pushed to ``k_cap``; extra terms must vanish."""
    _check(FormulaId.GZ_ODD, r, n)
    return sum((t for _, _, t in _gz_odd(r, n, k_cap)), Fraction(0))


def formula_target(formula: FormulaId | str, r: int, n: int) -> tuple[str, int, int]:
    """(kind, order, argument) of the value the formula produces."""
    formula = FormulaId(formula)
    if formula in (FormulaId.EVEN_A2, FormulaId.EVEN_B2, FormulaId.LAGRANGE_EVEN):
        return "U", 2 * r, n
    if formula in (FormulaId.ODD_EVEN2, FormulaId.LAGRANGE_ODD_EVEN):
        return "U", 2 * r + 1, 2 * n
    if formula in (FormulaId.ODD_ODD2, FormulaId.LAGRANGE_ODD_ODD):
        return "U", 2 * r - 1, 2 * n - 1
    if formula is FormulaId.GZ_EVEN:
        return "S", 2 * r, n
    return "S", 2 * r - 1, n


def formulas_for(order: int, arg: int) -> list[tuple[FormulaId, int, int]]:
    """Formulas (with their own parameters) that produce U_order(arg)."""
    out: list[tuple[FormulaId, int, int]] = []
    candidates: list[tuple[FormulaId, int, int]] = []
    if order % 2 == 0:
        r = order // 2
        candidates += [(FormulaId.EVEN_A2, r, arg), (FormulaId.EVEN_B2, r, arg),
                       (FormulaId.LAGRANGE_EVEN, r, arg)]
        if arg % 2 == 0:
            candidates.append((FormulaId.GZ_EVEN, r, arg // 2))
    else:
        if arg % 2 == 0:
            r = (order - 1) // 2
            candidates += [(FormulaId.ODD_EVEN2, r, arg // 2),
                           (FormulaId.LAGRANGE_ODD_EVEN, r, arg // 2),
                           (FormulaId.GZ_ODD, (order + 1) // 2, arg // 2)]
        else:
            r, n = (order + 1) // 2, (arg + 1) // 2
            candidates += [(FormulaId.ODD_ODD2, r, n), (FormulaId.LAGRANGE_ODD_ODD, r, n)]
    for f, r, n in candidates:
        r_min, n_min, _ = _VALIDITY[f]
        if r >= r_min and n >= n_min:
            out.append((f, r, n))
    return out


def lagrange_interpolate(nodes: Sequence[Rational], values: Sequence[Rational], x: Rational) -> Fraction:
    """Value at x of the unique polynomial of degree < len(nodes) through the data."""
    if len(nodes) != len(values) or not nodes:
        raise ValueError("need equally many nodes and values, at least one")
    if len(set(nodes)) != len(nodes):
        raise ValueError("interpolation nodes must be distinct")
    x = Fraction(x)
    total = Fraction(0)
    for k, (xk, yk) in enumerate(zip(nodes, values)):
        basis = Fraction(1)
        for j, xj in enumerate(nodes):
            if j != k:
                basis *= (x - xj) / Fraction(xk - xj)
        total += yk * basis
    return total


# ---------------------------------------------------------------- cross-validation

@dataclass(frozen=True)
class Cell:
    r: int
    n: int
    method: str
    expected: Fraction
    actual: Fraction | None
    error: str | None = None

    @property
    def agrees(self) -> bool:
        return self.error is None and self.actual == self.expected


@dataclass
class CrossValidationReport:
    r_max: int
    n_max: int
    cells: list[Cell] = field(default_factory=list)

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.agrees]

    @property
    def ok(self) -> bool:
        return not self.failures

    def methods_at(self, r: int, n: int) -> list[str]:
        return [c.method for c in self.cells if c.r == r and c.n == n]


def df_applies(order: int, arg: int) -> bool:
    if arg < 1:
        return False
    if order % 2 == 0:
        return order >= 2
    return arg % 2 == 1 or order >= 3


def evaluators_for(order: int, arg: int) -> list[tuple[str, Callable[[], Fraction]]]:
    """Every independent route to U_order(arg) that applies, labelled."""
    routes: list[tuple[str, Callable[[], Fraction]]] = []
    if order >= 1:
        routes.append(("halfrange", lambda: u_direct_halfrange(order, arg)))
    routes.append(("recurrence", lambda: u_recurrence(order, arg)))
    routes.append(("family", lambda: u_from_family(order, arg)))
    if df_applies(order, arg):
        routes.append(("df", lambda: u_from_df(order, arg)))
    for f, r, n in formulas_for(order, arg):
        routes.append((f"closed:{f.value}", lambda f=f, r=r, n=n: u_closed(f, r, n)))
    return routes


def _cells_for(rn: tuple[int, int]) -> list[Cell]:
    order, arg = rn
    expected = u_direct(order, arg)
    cells = []
    for name, fn in evaluators_for(order, arg):
        try:
            cells.append(Cell(order, arg, name, expected, fn()))
        except Exception as exc:  # disagreements are report content
            cells.append(Cell(order, arg, name, expected, None, f"{type(exc).__name__}: {exc}"))
    return cells


def cross_validate(r_max: int, n_max: int, jobs: int = 1) -> CrossValidationReport:
    """Check every applicable route against u_direct on 0..r_max x 0..n_max."""
    if r_max < 1 or n_max < 1:
        raise ValueError("r_max and n_max must be >= 1")
    grid = [(r, n) for r in range(r_max + 1) for n in range(n_max + 1)]
    report = CrossValidationReport(r_max, n_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_cells_for, grid, chunksize=8))
    else:
        chunks = [_cells_for(rn) for rn in grid]
    for chunk in chunks:
        report.cells.extend(chunk)
    report.cells.sort(key=lambda c: (c.r, c.n, c.method))
    return report
