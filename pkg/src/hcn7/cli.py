"""Command-line front end.

Commands: hurwitz, sum, table, verify, newform, series.  Output formats
text (default), csv (header row, LF endings) and json (fixed key order).
Rationals are always rendered as "num/den" strings, integers as plain
decimals, never as floats.

Exit codes: 0 success, 1 verification/cross-check failure, 2 usage error.
The HCN_MAX_ORDER environment variable caps internal series expansion
(default 3000).
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .arith import d_pa_series, d_series, lambda_series, LambdaSpec, psi_k, theta_mM
from .hurwitz import hmm_sum, hurwitz_batch, hurwitz_series, hurwitz_single
from .newform49 import cm_ap, g_series, newform_an, newform_ap
from .primes import primes_up_to
from .qseries import QSeries, chi_minus7
from .verify import SUITE_NAMES, main_table_row, run_suite


@dataclass(frozen=True)
class OutputRecord:
    """One machine-readable result: a kind tag plus key -> value payload."""

    kind: str
    payload: dict

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "payload": self.payload}, indent=2)


def fmt_rat(x) -> str:
    """Render exactly: "num/den" for proper fractions, plain decimal else."""
    return str(Fraction(x))


def _print_csv(header: list[str], rows: list[list[str]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_hurwitz(args) -> int:
    if args.max is not None:
        table = hurwitz_batch(args.max)
        pairs = [(n, fmt_rat(table[n])) for n in range(args.max + 1)]
        if args.format == "json":
            record = OutputRecord(
                "hurwitz-table",
                {"n_max": args.max, "values": [{"N": n, "H": h} for n, h in pairs]},
            )
            print(record.to_json())
        elif args.format == "csv":
            _print_csv(["N", "H"], [[str(n), h] for n, h in pairs])
        else:
            for n, h in pairs:
                print(n, h)
        return 0
    if args.N is None:
        raise ValueError("give a single N or --max N")
    value = fmt_rat(hurwitz_single(args.N))
    if args.format == "json":
        print(OutputRecord("hurwitz", {"N": args.N, "H": value}).to_json())
    elif args.format == "csv":
        _print_csv(["N", "H"], [[str(args.N), value]])
    else:
        print(value)
    return 0


def cmd_sum(args) -> int:
    value = fmt_rat(hmm_sum(args.m, args.M, args.n))
    if args.format == "json":
        record = OutputRecord(
            "sum", {"m": args.m, "M": args.M, "n": args.n, "value": value}
        )
        print(record.to_json())
    elif args.format == "csv":
        _print_csv(["m", "M", "n", "value"], [[str(args.m), str(args.M), str(args.n), value]])
    else:
        print(value)
    return 0


def cmd_table(args) -> int:
    if args.pmax < 3:
        raise ValueError("--pmax must be at least 3")
    rows = []
    all_ok = True
    for p in primes_up_to(args.pmax):
        if p in (2, 7):
            continue
        row = main_table_row(p)
        all_ok = all_ok and row.ok
        rows.append(row)
    if args.format == "json":
        payload = {
            "p_max": args.pmax,
            "rows": [
                {
                    "p": r.p,
                    "class": r.residue,
                    "x": r.x,
                    "y": r.y,
                    "cells": [
                        {"m": m, "direct": fmt_rat(d), "formula": fmt_rat(f), "match": ok}
                        for m, d, f, ok in r.cells
                    ],
                }
                for r in rows
            ],
            "ok": all_ok,
        }
        print(OutputRecord("table", payload).to_json())
    elif args.format == "csv":
        header = ["p", "class", "x", "y"]
        for m in range(4):
            header += [f"m{m}_direct", f"m{m}_formula", f"m{m}_match"]
        out = []
        for r in rows:
            line = [str(r.p), str(r.residue), "" if r.x is None else str(r.x), "" if r.y is None else str(r.y)]
            for m, d, f, ok in r.cells:
                line += [fmt_rat(d), fmt_rat(f), "1" if ok else "0"]
            out.append(line)
        _print_csv(header, out)
    else:
        for r in rows:
            rep = f"x={r.x} y={r.y}" if r.x is not None else "inert"
            cells = "  ".join(
                f"m{m}: {fmt_rat(d)}{'=' if ok else '!='}{fmt_rat(f)}"
                for m, d, f, ok in r.cells
            )
            flag = "" if r.ok else "  MISMATCH"
            print(f"p={r.p} (class {r.residue}, {rep})  {cells}{flag}")
    return 0 if all_ok else 1


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.bound)
    all_ok = all(r.ok for r in reports)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "reports": [
                {
                    "id": r.id,
                    "ok": r.ok,
                    "checked_upto": r.checked_upto,
                    "first_mismatch": None
                    if r.first_mismatch is None
                    else {
                        "n": r.first_mismatch[0],
                        "lhs": fmt_rat(r.first_mismatch[1]),
                        "rhs": fmt_rat(r.first_mismatch[2]),
                    },
                }
                for r in reports
            ],
            "ok": all_ok,
        }
        print(OutputRecord("verify", payload).to_json())
    elif args.format == "csv":
        rows = []
        for r in reports:
            n, lhs, rhs = ("", "", "")
            if r.first_mismatch is not None:
                n, lhs, rhs = (
                    str(r.first_mismatch[0]),
                    fmt_rat(r.first_mismatch[1]),
                    fmt_rat(r.first_mismatch[2]),
                )
            rows.append([r.id, "1" if r.ok else "0", str(r.checked_upto), n, lhs, rhs])
        _print_csv(["id", "ok", "checked_upto", "mismatch_n", "lhs", "rhs"], rows)
    else:
        for r in reports:
            print(r)
    return 0 if all_ok else 1


def cmd_newform(args) -> int:
    if args.method in ("ec", "cm"):
        if args.method == "ec":
            values = list(newform_an(args.nmax).a[1:])
        else:
            # CM route for the prime coefficients, Hecke extension beyond
            an = newform_an(args.nmax)
            values = list(an.a[1:])
            for p in primes_up_to(args.nmax):
                values[p - 1] = cm_ap(p)
        if args.format == "json":
            print(OutputRecord("newform", {"method": args.method, "n_max": args.nmax, "a": values}).to_json())
        elif args.format == "csv":
            _print_csv(["n", "a_n"], [[str(n + 1), str(v)] for n, v in enumerate(values)])
        else:
            print(",".join(str(v) for v in values))
        return 0
    # cross: both prime routes side by side
    rows = []
    all_ok = True
    for p in primes_up_to(args.nmax):
        if p in (2, 7):
            continue
        ec, cm = newform_ap(p), cm_ap(p)
        ok = ec == cm
        all_ok = all_ok and ok
        rows.append((p, ec, cm, ok))
    if args.format == "json":
        payload = {
            "n_max": args.nmax,
            "primes": [{"p": p, "ec": ec, "cm": cm, "match": ok} for p, ec, cm, ok in rows],
            "ok": all_ok,
        }
        print(OutputRecord("newform-cross", payload).to_json())
    elif args.format == "csv":
        _print_csv(
            ["p", "a_p_ec", "a_p_cm", "match"],
            [[str(p), str(ec), str(cm), "1" if ok else "0"] for p, ec, cm, ok in rows],
        )
    else:
        for p, ec, cm, ok in rows:
            print(f"p={p} ec={ec} cm={cm} {'ok' if ok else 'MISMATCH'}")
        print(f"cross-check {'ok' if all_ok else 'FAILED'}: {len(rows)} odd primes <= {args.nmax}")
    return 0 if all_ok else 1


_SERIES_PATTERNS = [
    (re.compile(r"^H$"), lambda m, order: hurwitz_series(order)),
    (re.compile(r"^D$"), lambda m, order: d_series(order)),
    (re.compile(r"^G$"), lambda m, order: g_series(order)),
    (re.compile(r"^Psi7$"), lambda m, order: psi_k(chi_minus7(), 7, order)),
    (re.compile(r"^D1_7_([0-6])$"), lambda m, order: d_pa_series(1, 7, int(m.group(1)), order)),
    (re.compile(r"^theta_([0-6])_7$"), lambda m, order: theta_mM(int(m.group(1)), 7, order)),
    (re.compile(r"^Lambda_1_([0-6])_7$"), lambda m, order: lambda_series(LambdaSpec(1, int(m.group(1)), 7), order)),
]


def named_series(name: str, order: int) -> QSeries:
    for pattern, builder in _SERIES_PATTERNS:
        m = pattern.match(name)
        if m:
            return builder(m, order)
    raise ValueError(
        f"unknown series {name!r}; expected H, D, G, Psi7, D1_7_a, "
        "theta_m_7 or Lambda_1_m_7 with a, m in 0..6"
    )


def cmd_series(args) -> int:
    series = named_series(args.name, args.order)
    coeffs = [fmt_rat(c) for c in series.coeffs]
    if args.format == "json":
        record = OutputRecord(
            "series", {"name": args.name, "order": series.order, "coeffs": coeffs}
        )
        print(record.to_json())
    elif args.format == "csv":
        _print_csv(["n", "coeff"], [[str(n), c] for n, c in enumerate(coeffs)])
    else:
        print(",".join(coeffs))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcn7",
        description="Exact Hurwitz class number sums mod 7 and their identity battery.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("hurwitz", help="Hurwitz class number H(N), single or table")
    p.add_argument("N", nargs="?", type=int, default=None)
    p.add_argument("--max", type=int, default=None, help="emit the table for 0..MAX")
    add_format(p)
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("sum", help="residue-restricted sum H_{m,M}(n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("table", help="closing table vs direct sums per odd prime")
    p.add_argument("--pmax", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    p.add_argument("--bound", type=int, default=None, help="truncate the default bounds")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("newform", help="newform coefficients a_n")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--method", choices=("ec", "cm", "cross"), default="ec")
    add_format(p)
    p.set_defaults(func=cmd_newform)

    p = sub.add_parser("series", help="dump a named q-series")
    p.add_argument(
        "name",
        help="H | D | G | Psi7 | D1_7_a | theta_m_7 | Lambda_1_m_7 (a, m in 0..6)",
    )
    p.add_argument("--order", type=int, default=30)
    add_format(p)
    p.set_defaults(func=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
