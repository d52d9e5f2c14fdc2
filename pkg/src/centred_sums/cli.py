"""Command-line front end.

Exit status: 0 success/agreement, 1 verification failure or disagreement,
2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import datetime as _dt
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence, TextIO

from . import __version__
from .closed_forms import FormulaDomainError, FormulaId, df_applies, formulas_for, u_closed
from .direct_eval import s_direct, u_direct, u_direct_halfrange, walk_moment_mc
from .dumont_foata import df_poly, u_from_df
from .numeric_core import dyadic_log2, format_rational
from .poly_families import (
    FamilyId,
    classic_sequences,
    family_poly,
    secant_numbers,
    special_values,
    u_from_family,
)
from .recurrences import u_recurrence
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

METHODS = ("direct", "halfrange", "recurrence", "family", "df", "carlitz", "lagrange", "gz")

_FORMULA_GROUPS = {
    "carlitz": (FormulaId.EVEN_A2, FormulaId.EVEN_B2, FormulaId.ODD_EVEN2, FormulaId.ODD_ODD2),
    "lagrange": (FormulaId.LAGRANGE_EVEN, FormulaId.LAGRANGE_ODD_EVEN, FormulaId.LAGRANGE_ODD_ODD),
    "gz": (FormulaId.GZ_EVEN, FormulaId.GZ_ODD),
}

_VALIDITY_HELP = {
    "halfrange": "order r >= 1, argument n >= 0",
    "recurrence": "n >= 0",
    "family": "n >= 0",
    "df": "n >= 1; even order >= 2; odd order at even n needs order >= 3",
    "carlitz": "EvenA2/EvenB2: U_{2r}(n), r,n >= 1; OddEven2: U_{2r+1}(2n), r,n >= 1; "
               "OddOdd2: U_{2r-1}(2n-1), r,n >= 1",
    "lagrange": "LagrangeEven: U_{2r}(n), r,n >= 1; LagrangeOddEven: U_{2r+1}(2n), r >= 1, n >= 0; "
                "LagrangeOddOdd: U_{2r-1}(2n-1), r,n >= 1",
    "gz": "GZEven: S_{2r}(n) = U_{2r}(2n), r >= 1; GZOdd: S_{2r-1}(n) = U_{2r-1}(2n), r >= 1",
}


def _from_offset(fn: Callable[[int], int], offset: int) -> Callable[[int], list[int]]:
    return lambda count: [fn(i) for i in range(offset, offset + count)]


def _triangle(rows: Callable[[int], list[int]], first_row: int) -> Callable[[int], list[int]]:
    def gen(count: int) -> list[int]:
        out: list[int] = []
        r = first_row
        while len(out) < count:
            out.extend(rows(r))
            r += 1
        return out[:count]
    return gen


def _neg_arg_over_n(fam: FamilyId) -> Callable[[int], list[int]]:
    # (-1)^r p_r(-n)/n, ascending; makes every entry positive
    def row(r: int) -> list[int]:
        inner = family_poly(fam, r).divide_by_n()
        return [(-1) ** (r + d + 1) * c for d, c in enumerate(inner.coefficients)]
    return row


# name -> (offset, description, generator(count) -> list[int])
SEQUENCES: dict[str, tuple[int, str, Callable[[int], list[int]]]] = {
    "secant": (0, "secant numbers S_r, r >= 0 (A000364)", secant_numbers),
    "genocchi": (1, "constant term of -P_r(n)/n, r >= 1 (A001469)",
                 lambda c: classic_sequences("genocchi", c)),
    "reduced-tangent": (1, "constant term of (-1)^(r-1) Q_r(n)/n, r >= 1 (A002105)",
                        lambda c: classic_sequences("reduced-tangent", c)),
    "pbar-at-zero": (0, "Pbar_r(0) with sign, r >= 0",
                     lambda c: classic_sequences("pbar-at-zero", c)),
    "qbar-at-one": (0, "Qbar_r(1) = (3^(2r)+3)/4, r >= 0",
                    _from_offset(lambda r: special_values(FamilyId.QBAR, r).at_one, 0)),
    "p-leading": (0, "leading coefficient of P_r = r! (A000142)",
                  _from_offset(lambda r: family_poly(FamilyId.P, r).leading, 0)),
    "q-leading": (0, "leading coefficient of Q_r = (2r)!/(2^r r!) (A001147)",
                  _from_offset(lambda r: family_poly(FamilyId.Q, r).leading, 0)),
    "pbar-leading": (0, "leading coefficient of Pbar_r = 4^r r!",
                     _from_offset(lambda r: family_poly(FamilyId.PBAR, r).leading, 0)),
    "qbar-leading": (0, "leading coefficient of Qbar_r = (2r)!/r! (A001813)",
                     _from_offset(lambda r: family_poly(FamilyId.QBAR, r).leading, 0)),
    "p-triangle": (1, "coefficients of (-1)^r P_r(-n)/n, rows r >= 1, constant term first",
                   _triangle(_neg_arg_over_n(FamilyId.P), 1)),
    "q-triangle": (1, "coefficients of (-1)^r Q_r(-n)/n, rows r >= 1, constant term first",
                   _triangle(_neg_arg_over_n(FamilyId.Q), 1)),
    "qbar-triangle": (1, "coefficients of Qbar_r(-n), rows r >= 1, constant term first",
                      _triangle(lambda r: [(-1) ** d * c for d, c in
                                           enumerate(family_poly(FamilyId.QBAR, r).coefficients)], 1)),
    "pbar-triangle": (0, "coefficients of Pbar_r(n), rows r >= 0, constant term first",
                      _triangle(lambda r: list(family_poly(FamilyId.PBAR, r).coefficients), 0)),
}


class DomainError(Exception):
    pass


# ---------------------------------------------------------------- output helpers

def _manifest(command: str, params: dict[str, Any]) -> dict[str, Any]:
    return {
        "command": command,
        "parameters": params,
        "artifact_version": __version__,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
    }


def _emit_json(out: TextIO, command: str, params: dict, results: list[dict]) -> None:
    doc = {"manifest": _manifest(command, params), "command": command, "results": results}
    json.dump(doc, out, indent=2)
    out.write("\n")


def _params(args: argparse.Namespace) -> dict[str, Any]:
    return {k: v for k, v in vars(args).items() if k not in ("func", "command") and v is not None}


def _row(id_: str, inputs: dict, actual: Any, expected: Any = None, ok: bool = True) -> dict:
    d: dict[str, Any] = {"id": id_, "inputs": inputs}
    if expected is not None:
        d["expected"] = expected
    d["actual"] = actual
    d["status"] = "pass" if ok else "fail"
    return d


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        a, b = int(lo), int(hi)
    else:
        a = b = int(text)
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


# ---------------------------------------------------------------- compute

def _method_rows(method: str, r: int, n: int) -> list[tuple[str, Callable[[], Fraction]]]:
    if method == "direct":
        return [("direct", lambda: u_direct(r, n))]
    if n < 0:
        raise DomainError(f"{method} needs n >= 0; for n < 0 every U_r(n) is 0 (use --method direct)")
    if method == "halfrange":
        if r < 1:
            raise DomainError(f"halfrange: valid for {_VALIDITY_HELP['halfrange']}")
        return [("halfrange", lambda: u_direct_halfrange(r, n))]
    if method == "recurrence":
        return [("recurrence", lambda: u_recurrence(r, n))]
    if method == "family":
        return [("family", lambda: u_from_family(r, n))]
    if method == "df":
        if not df_applies(r, n):
            raise DomainError(f"df: not valid for U_{r}({n}); valid for {_VALIDITY_HELP['df']}")
        return [("df", lambda: u_from_df(r, n))]
    group = _FORMULA_GROUPS[method]
    rows = []
    for f, fr, fn in formulas_for(r, n):
        if f in group:
            rows.append((f"{method}:{f.value}", lambda f=f, fr=fr, fn=fn: u_closed(f, fr, fn)))
    if not rows:
        raise DomainError(f"{method}: no formula applies to U_{r}({n}); valid ranges: {_VALIDITY_HELP[method]}")
    return rows


def _applicable(r: int, n: int) -> list[tuple[str, Callable[[], Fraction]]]:
    rows: list[tuple[str, Callable[[], Fraction]]] = []
    for m in METHODS:
        try:
            rows.extend(_method_rows(m, r, n))
        except DomainError:
            continue
    return rows


def cmd_compute(args: argparse.Namespace, out: TextIO) -> int:
    r, n = args.r, args.n
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if args.kind == "S":
        n = 2 * n
    rows = _applicable(r, n) if args.method == "all" else _method_rows(args.method, r, n)
    values = []
    for label, fn in rows:
        try:
            values.append((label, fn()))
        except (ValueError, ArithmeticError) as exc:
            raise DomainError(f"{label}: {exc}") from None
    if args.kind == "S" and args.method in ("direct", "all"):
        values = [(lbl, v) for lbl, v in values if lbl != "direct"]
        values.insert(0, ("direct", s_direct(r, args.n)))
    reference = values[0][1]
    agree = all(v == reference for _, v in values)
    name = f"{args.kind}_{r}({args.n})"
    if args.format == "json":
        res = [_row(lbl, {"r": r, "n": args.n, "kind": args.kind}, format_rational(v),
                    format_rational(reference), v == reference) for lbl, v in values]
        _emit_json(out, "compute", _params(args), res)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["method", "kind", "r", "n", "value"])
        for lbl, v in values:
            w.writerow([lbl, args.kind, r, args.n, format_rational(v)])
    else:
        if len(values) == 1:
            out.write(format_rational(reference) + "\n")
        else:
            width = max(len(lbl) for lbl, _ in values)
            for lbl, v in values:
                out.write(f"{lbl:<{width}}  {format_rational(v)}\n")
            out.write(("AGREE" if agree else "DISAGREE") + f" ({len(values)} methods, {name})\n")
    return EXIT_OK if agree else EXIT_FAIL


# ---------------------------------------------------------------- poly

def cmd_poly(args: argparse.Namespace, out: TextIO) -> int:
    if args.family == "F":
        if args.r < 1:
            raise DomainError(f"F_r is defined for r >= 1 only, got r={args.r}")
        p = df_poly(args.r)
        text = p.render()
        terms = [[i, j, k, c] for (i, j, k), c in sorted(p.terms.items(), reverse=True)]
        payload: dict[str, Any] = {"text": text, "terms": terms}
    else:
        if args.r < 0:
            raise DomainError(f"r must be >= 0, got {args.r}")
        p = family_poly(args.family, args.r)
        text = p.render()
        payload = {"text": text, "plain": p.render(factor_n=False), "coefficients": list(p.coefficients)}
    if args.format == "json":
        _emit_json(out, "poly", _params(args),
                   [_row(f"{args.family}_{args.r}", {"family": args.family, "r": args.r}, payload)])
    else:
        out.write(text + "\n")
        if args.coefficients and args.family == "F":
            for term in payload["terms"]:
                out.write(" ".join(map(str, term)) + "\n")
        elif args.coefficients:
            out.write(" ".join(map(str, payload["coefficients"])) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- oeis

def cmd_oeis(args: argparse.Namespace, out: TextIO) -> int:
    if args.name not in SEQUENCES:
        raise DomainError(f"unknown sequence {args.name!r}; valid names: {', '.join(SEQUENCES)}")
    if args.count < 1:
        raise DomainError("count must be >= 1")
    offset, desc, gen = SEQUENCES[args.name]
    values = gen(args.count)
    if args.format == "bfile":
        out.write("".join(f"{offset + i} {v}\n" for i, v in enumerate(values)))
    elif args.format == "json":
        res = [_row(f"{args.name}/{offset + i}", {"index": offset + i}, v) for i, v in enumerate(values)]
        _emit_json(out, "oeis", _params(args), res)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["index", "value"])
        for i, v in enumerate(values):
            w.writerow([offset + i, v])
    else:
        out.write(" ".join(str(v) for v in values) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- verify

def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    checks = run_suite(args.suite, r_max=args.r_max, n_max=args.n_max, order=args.order, jobs=args.jobs)
    failed = [c for c in checks if not c.passed]
    if args.format == "json":
        _emit_json(out, "verify", _params(args), [c.as_dict() for c in checks])
    else:
        by_suite: dict[str, list] = {}
        for c in checks:
            by_suite.setdefault(c.id.split("/", 1)[0], []).append(c)
        for suite, cs in by_suite.items():
            bad = sum(not c.passed for c in cs)
            out.write(f"{suite:<14} {len(cs) - bad}/{len(cs)} passed\n")
        for c in failed:
            d = c.as_dict()
            out.write(f"FAIL {c.id}: expected {d.get('expected')!r}, got {d['actual']!r}\n")
        out.write(("OK" if not failed else f"{len(failed)} FAILED") + "\n")
    return EXIT_OK if not failed else EXIT_FAIL


# ---------------------------------------------------------------- table

def cmd_table(args: argparse.Namespace, out: TextIO) -> int:
    rows = []
    for r in args.r:
        if r < 0:
            raise DomainError(f"r must be >= 0, got {r}")
        for n in args.n:
            v = u_recurrence(r, n) if n >= 0 else Fraction(0)
            rows.append((r, n, v))
    if args.format == "json":
        res = [_row(f"U_{r}({n})", {"r": r, "n": n}, format_rational(v)) for r, n, v in rows]
        _emit_json(out, "table", _params(args) | {"r": [args.r.start, args.r.stop - 1],
                                                   "n": [args.n.start, args.n.stop - 1]}, res)
    elif args.format == "text":
        for r, n, v in rows:
            out.write(f"U_{r}({n}) = {format_rational(v)}\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["r", "n", "numerator", "denominator_log2"])
        for r, n, v in rows:
            w.writerow([r, n, v.numerator, dyadic_log2(v)])
    return EXIT_OK


# ---------------------------------------------------------------- moment

def cmd_moment(args: argparse.Namespace, out: TextIO) -> int:
    if args.r < 0 or args.n < 0 or args.samples < 1:
        raise DomainError("need r >= 0, n >= 0, samples >= 1")
    est = walk_moment_mc(args.r, args.n, args.samples, args.seed)
    exact = u_direct(args.r, args.n) / 2**args.n
    ok = est.within(float(exact))
    z = (est.mean - float(exact)) / est.stderr if est.stderr else 0.0
    if args.format == "json":
        _emit_json(out, "moment", _params(args), [_row(
            f"E|n/2-K|^{args.r}", {"r": args.r, "n": args.n, "samples": args.samples, "seed": args.seed},
            {"mean": est.mean, "stderr": est.stderr, "z": z}, format_rational(exact), ok)])
    else:
        out.write(f"estimate {est.mean:.6g} +- {est.stderr:.3g}  exact {format_rational(exact)}"
                  f" = {float(exact):.6g}  z = {z:+.2f}\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="centred-sums",
        description="Exact centred binomial sums U_r(n) = sum_k C(n,k)|n/2-k|^r and S_r(n) = U_r(2n).",
        epilog="Exit status: 0 ok, 1 verification failure/disagreement, 2 usage or domain error. "
               f"Set CENTRED_SUMS_CACHE_CAP to bound the recurrence memo table.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate U_r(n) (or S_r(n)) by one or all methods")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", choices=METHODS + ("all",), default="direct")
    c.add_argument("--kind", choices=("U", "S"), default="U", help="S_r(n) is evaluated as U_r(2n)")
    c.add_argument("--format", choices=("text", "json", "csv"), default="text")
    c.set_defaults(func=cmd_compute)

    q = sub.add_parser("poly", help="print P_r, Pbar_r, Q_r, Qbar_r or F_r")
    q.add_argument("--family", choices=("P", "Pbar", "Q", "Qbar", "F"), required=True)
    q.add_argument("--r", type=int, required=True)
    q.add_argument("--coefficients", action="store_true", help="also print the coefficient list")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_poly)

    offsets = "; ".join(f"{k}: offset {v[0]}, {v[1]}" for k, v in SEQUENCES.items())
    o = sub.add_parser("oeis", help="emit an integer sequence", description=f"Sequences and offsets. {offsets}")
    o.add_argument("--name", required=True, metavar="NAME", help=f"one of: {', '.join(SEQUENCES)}")
    o.add_argument("--count", type=int, default=10)
    o.add_argument("--format", choices=("text", "json", "csv", "bfile"), default="text")
    o.set_defaults(func=cmd_oeis)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--r-max", type=int, default=8)
    v.add_argument("--n-max", type=int, default=30, help="egf suite caps this at 8")
    v.add_argument("--order", type=int, default=20)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="grid of U_r(n) via the recurrence")
    t.add_argument("--r", type=_parse_range, required=True, help="e.g. 0..6")
    t.add_argument("--n", type=_parse_range, required=True, help="e.g. 0..100")
    t.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("moment", help="Monte Carlo estimate of U_r(n)/2^n")
    m.add_argument("--r", type=int, required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--samples", type=int, default=100_000)
    m.add_argument("--seed", type=int, default=1)
    m.add_argument("--format", choices=("text", "json"), default="text")
    m.set_defaults(func=cmd_moment)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (DomainError, FormulaDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
