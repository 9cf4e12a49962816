"""Command-line interface: ``samelson compute | sweep | chern``.

Exit codes: 0 verified, 1 mathematical mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .chern import COMPOSITION_LIMIT, chern_via_compositions, chern_via_series, chern_via_stirling
from .rational_core import format_fraction
from .samelson_order import OrderReport, SamelsonParams, compute_order, sweep

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

CSV_HEADER = ["m", "n", "order", "closed_form", "match"]


def output_record(report: OrderReport, verbose: bool = False) -> dict:
    record = {
        "m": report.params.m,
        "n": report.params.n,
        "order": str(report.computed_order),
        "closed_form": str(report.closed_form_order),
        "match": report.matches,
        "sigma_consistent": report.sigma_consistent,
        "group": report.group_description,
    }
    if verbose:
        record["generators"] = [
            {
                "k": g.k,
                "chern_coeff": format_fraction(g.chern_coeff),
                "phi": str(g.phi_value),
                "sigma": g.sigma,
                "psi": str(g.psi_value),
            }
            for g in report.generators
        ]
    return record


def render_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r["m"], r["n"], r["order"], r["closed_form"], "true" if r["match"] else "false"])
    return buf.getvalue().rstrip("\n")


def _yes_no(record: dict) -> str:
    if not record["match"]:
        return "NO"
    return "yes" if record["sigma_consistent"] else "sigma?"


def render_text(records: list[dict]) -> str:
    header = ["m", "n", "order", "closed_form", "match", "group"]
    rows = [
        [str(r["m"]), str(r["n"]), r["order"], r["closed_form"], _yes_no(r), r["group"]]
        for r in records
    ]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for r, row in zip(records, rows):
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
        for g in r.get("generators", []):
            lines.append(
                f"    k={g['k']}  ch={g['chern_coeff']}  phi={g['phi']}  sigma={g['sigma']}  psi={g['psi']}"
            )
    return "\n".join(lines)


def _render_reports(records: list[dict], fmt: str, single: bool) -> str:
    if fmt == "json":
        return render_json(records[0] if single else records)
    if fmt == "csv":
        return render_csv(records)
    return render_text(records)


def cmd_compute(args) -> int:
    report = compute_order(SamelsonParams(args.m, args.n))
    print(_render_reports([output_record(report, args.verbose)], args.format, single=True))
    return EXIT_OK if report.verified else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    reports = sweep(args.max_n)
    records = [output_record(r, args.verbose) for r in reports]
    print(_render_reports(records, args.format, single=False))
    return EXIT_OK if all(r.verified for r in reports) else EXIT_MISMATCH


def cmd_chern(args) -> int:
    j, k = args.j, args.k
    series = chern_via_series(j, k)
    stirling = chern_via_stirling(j, k)
    if j <= COMPOSITION_LIMIT:
        composition = chern_via_compositions(j, k)
        values = [series, composition, stirling]
    else:
        composition = None
        values = [series, stirling]
        print(
            f"note: composition oracle skipped (size limit j <= {COMPOSITION_LIMIT})",
            file=sys.stderr,
        )
    agree = all(v == values[0] for v in values)
    fields = {
        "j": j,
        "k": k,
        "series": format_fraction(series),
        "compositions": None if composition is None else format_fraction(composition),
        "stirling": format_fraction(stirling),
        "agree": agree,
    }
    if args.format == "json":
        print(render_json(fields))
    elif args.format == "csv":
        print("j,k,series,compositions,stirling,agree")
        print(
            f"{j},{k},{fields['series']},{fields['compositions'] or ''},"
            f"{fields['stirling']},{'true' if agree else 'false'}"
        )
    else:
        shown = [fields["series"], fields["compositions"] or "n/a", fields["stirling"]]
        print(", ".join(shown + ["agree" if agree else "disagree"]))
    return EXIT_OK if agree else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="samelson",
        description="Exact verification of the order of the Samelson product <eps, eps> in Sp(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["text", "csv", "json"], default="text", help="output format (default: text)")

    p = sub.add_parser("compute", help="order for a single (m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.add_argument("--verbose", action="store_true", help="include per-generator breakdown")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("sweep", help="all 1 <= m < n <= max-n")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--format", **fmt)
    p.add_argument("--verbose", action="store_true", help="include per-generator breakdown")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("chern", help="compare the three computations of ch_j(x^k)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_chern)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "compute" and not 1 <= args.m < args.n:
        parser.error(f"need 1 <= m < n, got m={args.m}, n={args.n}")
    if args.command == "sweep" and args.max_n < 2:
        parser.error(f"--max-n must be >= 2, got {args.max_n}")
    if args.command == "chern" and (args.j < 1 or args.k < 1):
        parser.error(f"need j >= 1 and k >= 1, got j={args.j}, k={args.k}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
