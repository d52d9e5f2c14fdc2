"""Verification suites as flat lists of named checks.

Each check records its inputs and both sides of the comparison, so a JSON
dump of the list is a complete report.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import asymptotics as asy
from .closed_forms import cross_validate
from .dumont_foata import (
    carlitz_sample_points,
    df_carlitz,
    df_eval,
    df_poly,
    family_from_df,
    symmetric_under_permutations,
)
from .numeric_core import format_rational
from .poly_families import (
    FamilyId,
    classic_sequences,
    family_poly,
    pbar_at_zero_from_egf,
    qbar_from_q,
    secant_numbers,
    special_values,
    table1_closed_form,
)
from .reference_tables import PRINTED_POLYNOMIALS
from .series_egf import (
    EgfReport,
    series_self_test,
    verify_carlitz_egf,
    verify_egf_even,
    verify_egf_odd_even,
    verify_egf_odd_odd,
    verify_egf_s_even,
    verify_sinh_cosh_identity,
)

SUITES = ("closed-forms", "egf", "tables", "df", "asymptotics")

CARLITZ_SEED = 20140714
CARLITZ_EGF_POINTS = (
    (Fraction(1), Fraction(1)),
    (Fraction(1, 2), Fraction(1)),
    (Fraction(-3, 7), Fraction(5, 2)),
    (Fraction(2, 3), Fraction(-1, 4)),
    (Fraction(7, 5), Fraction(-9, 2)),
)


@dataclass
class Check:
    id: str
    inputs: dict[str, Any]
    actual: Any
    expected: Any = None
    passed: bool = True
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"id": self.id, "inputs": _jsonable(self.inputs)}
        if self.expected is not None:
            d["expected"] = _jsonable(self.expected)
        d["actual"] = _jsonable(self.actual)
        d["status"] = self.status
        if self.notes:
            d["notes"] = _jsonable(self.notes)
        return d


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


def _compare(id_: str, inputs: dict, expected: Any, actual: Any) -> Check:
    return Check(id_, inputs, actual, expected, expected == actual)


def closed_forms_suite(r_max: int, n_max: int, jobs: int = 1) -> list[Check]:
    rep = cross_validate(r_max, n_max, jobs=jobs)
    out = []
    for c in rep.cells:
        chk = Check(f"closed-forms/U_{c.r}({c.n:03d})/{c.method}", {"r": c.r, "n": c.n, "method": c.method},
                    c.actual if c.error is None else c.error, c.expected, c.agrees)
        out.append(chk)
    return out


def _egf_check(rep: EgfReport, tag: str) -> Check:
    return Check(
        f"egf/{rep.name}/{tag}",
        rep.params,
        [c.rhs for c in rep.comparisons],
        [c.lhs for c in rep.comparisons],
        rep.ok,
        dict(rep.notes, mismatched_indices=[c.index for c in rep.mismatches]) if (rep.notes or not rep.ok) else {},
    )


def egf_suite(n_max: int, order: int) -> list[Check]:
    even_order = order - order % 2
    out = [_egf_check(series_self_test(order), "self")]
    for n in range(0, n_max + 1):
        out.append(_egf_check(verify_egf_even(n, even_order), f"n={n:02d}"))
        out.append(_egf_check(verify_egf_s_even(n, even_order), f"n={n:02d}"))
        out.append(_egf_check(verify_sinh_cosh_identity(n, order), f"n={n:02d}"))
        if n >= 1:
            out.append(_egf_check(verify_egf_odd_even(n, order), f"n={n:02d}"))
            out.append(_egf_check(verify_egf_odd_odd(n, order), f"n={n:02d}"))
    for i, (x, y) in enumerate(CARLITZ_EGF_POINTS):
        out.append(_egf_check(verify_carlitz_egf(x, y, order), f"point={i}"))
    return out


def tables_suite(r_max: int = 8) -> list[Check]:
    out = []
    for fam, rows in PRINTED_POLYNOMIALS.items():
        for r, coeffs in enumerate(rows):
            got = list(family_poly(fam, r).coefficients)
            out.append(_compare(f"tables/printed/{fam}_{r}", {"family": fam, "r": r}, coeffs, got))
    fields = ("at_zero", "at_one", "leading")
    for fam in FamilyId:
        for fld in fields:
            exp = [getattr(table1_closed_form(fam, r), fld) for r in range(r_max + 1)]
            got = [getattr(special_values(fam, r), fld) for r in range(r_max + 1)]
            out.append(_compare(f"tables/special/{fam.value}/{fld}", {"family": fam.value, "r_max": r_max},
                                exp, got))
    out.append(_compare("tables/sequence/genocchi", {"count": 5}, [-1, 1, -3, 17, -155],
                        classic_sequences("genocchi", 5)))
    out.append(_compare("tables/sequence/reduced-tangent", {"count": 5}, [1, 1, 4, 34, 496],
                        classic_sequences("reduced-tangent", 5)))
    out.append(_compare("tables/sequence/pbar-at-zero-egf", {"count": r_max + 3},
                        pbar_at_zero_from_egf(r_max + 3), classic_sequences("pbar-at-zero", r_max + 3)))
    sec = secant_numbers(r_max + 1)
    out.append(_compare("tables/sequence/pbar-at-zero-secant", {"r_max": r_max},
                        [(-1) ** r * (2 * r + 1) * sec[r] for r in range(r_max + 1)],
                        [family_poly(FamilyId.PBAR, r)(0) for r in range(r_max + 1)]))
    out.append(_compare("tables/bridge/qbar-from-q", {"r_max": 10},
                        [list(family_poly(FamilyId.QBAR, r).coefficients) for r in range(11)],
                        [list(qbar_from_q(r).coefficients) for r in range(11)]))
    return out


def df_suite(r_max: int = 7, points: int = 50) -> list[Check]:
    out = []
    for r in range(1, r_max + 1):
        p = df_poly(r)
        out.append(Check(f"df/symmetry/F_{r}", {"r": r}, symmetric_under_permutations(p), True,
                         symmetric_under_permutations(p)))
        nonneg = all(c > 0 for c in p.terms.values())
        out.append(Check(f"df/nonnegative/F_{r}", {"r": r}, nonneg, True, nonneg))
    pts = carlitz_sample_points(points, CARLITZ_SEED)
    for r in range(1, r_max + 1):
        lhs = [df_carlitz(r, *pt) for pt in pts]
        rhs = [df_eval(r, *pt) for pt in pts]
        out.append(_compare(f"df/carlitz/F_{r}", {"r": r, "points": points, "seed": CARLITZ_SEED}, rhs, lhs))
    sec = secant_numbers(r_max + 2)
    half = Fraction(1, 2)
    for r in range(0, r_max + 2):
        out.append(_compare(f"df/special-half/F_{r + 1}", {"r": r},
                            Fraction(2 * r + 1) * sec[r] / 4**r, df_eval(r + 1, half, half, half)))
    for fam in FamilyId:
        for r in range(1, r_max + 2):
            out.append(_compare(f"df/family-bridge/{fam.value}_{r}", {"family": fam.value, "r": r},
                                list(family_poly(fam, r).coefficients),
                                list(family_from_df(fam, r).coefficients)))
    return out


def asymptotics_suite(r_max: int = 6, doublings: int = 5) -> list[Check]:
    ns = [50 * 2**i for i in range(doublings + 1)]
    lo, hi = asy.ERROR_RATIO_WINDOW
    out = []
    for r in range(r_max + 1):
        reps = asy.asymptotic_error_scan(r, ns)
        errs = [x.rel_error for x in reps]
        if r in asy.EXACT_ORDERS:
            ok = max(errs) < asy.EXACT_ORDER_TOLERANCE
            out.append(Check(f"asymptotics/exact/r={r}", {"r": r, "n": ns}, errs,
                             f"< {asy.EXACT_ORDER_TOLERANCE}", ok))
            continue
        ratios = [b / a for a, b in zip(errs, errs[1:])]
        mono = all(b < a for a, b in zip(errs, errs[1:]))
        in_window = all(lo <= q <= hi for q in ratios)
        out.append(Check(f"asymptotics/ratio/r={r}", {"r": r, "n": ns}, ratios,
                         f"monotone, ratios in [{lo}, {hi}]", mono and in_window, {"rel_error": errs}))
    for r in range(4):
        e, a = asy.odd_even_leading_log(r, 200)
        rel = abs(math.expm1(e - a))
        out.append(Check(f"asymptotics/odd-even-leading/r={r}", {"r": r, "n": 200}, rel,
                         f"< {asy.ODD_EVEN_LEADING_BOUND_AT_200}", rel < asy.ODD_EVEN_LEADING_BOUND_AT_200))
    return out


def run_suite(name: str, r_max: int = 8, n_max: int = 30, order: int = 20, jobs: int = 1) -> list[Check]:
    runners: dict[str, Callable[[], list[Check]]] = {
        "closed-forms": lambda: closed_forms_suite(r_max, n_max, jobs),
        "egf": lambda: egf_suite(min(n_max, 8), order),
        "tables": lambda: tables_suite(),
        "df": lambda: df_suite(),
        "asymptotics": lambda: asymptotics_suite(),
    }
    names = SUITES if name == "all" else (name,)
    out: list[Check] = []
    for nm in names:
        if nm not in runners:
            raise ValueError(f"unknown suite {nm!r}; choose from all, {', '.join(SUITES)}")
        out.extend(runners[nm]())
    out.sort(key=lambda c: c.id)
    return out
