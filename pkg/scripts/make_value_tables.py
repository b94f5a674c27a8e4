#!/usr/bin/env python3
"""Emit extremal-value tables for the supported tree families.

Sweeps a grid of tree orders and host orders, evaluating the closed-form
edge maximum for each cell, and writes one CSV per family (or a single
markdown table to stdout).  Useful for eyeballing how the five residue
cases tile the (p, n) plane.

Example:
    python3 scripts/make_value_tables.py --families t3,tpp --n 15..20 \
        --p n..3n --outdir tables/
    python3 scripts/make_value_tables.py --n 15..17 --p n..2n --markdown
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from turantrees.cli import eval_nexpr
from turantrees.formulas import decompose, extremal_value
from turantrees.trees import t3, tpp, tppp

FAMILY_MAKERS = {"t3": t3, "tpp": tpp, "tppp": tppp}


def parse_args(argv=None) -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--families", default="t3,tpp,tppp",
                    help="comma-separated family names (default: all three)")
    ap.add_argument("--n", default="15..20", metavar="LO..HI",
                    help="tree-order range, inclusive (default: 15..20)")
    ap.add_argument("--p", default="n..3n", metavar="LO..HI",
                    help="host-order range; bounds may mention n (default: n..3n)")
    ap.add_argument("--outdir", type=Path, default=None,
                    help="write <family>_values.csv files here instead of stdout")
    ap.add_argument("--markdown", action="store_true",
                    help="print one markdown table per family")
    return ap.parse_args(argv)


def sweep(family_maker, n_lo: int, n_hi: int, p_expr: str):
    p_lo_expr, _, p_hi_expr = p_expr.partition("..")
    for n in range(n_lo, n_hi + 1):
        f = family_maker(n)
        p_lo = eval_nexpr(p_lo_expr, n)
        p_hi = eval_nexpr(p_hi_expr or p_lo_expr, n)
        for p in range(p_lo, p_hi + 1):
            ev = extremal_value(f, p)
            if p >= n:
                d = decompose(p, n)
                k, r = d.k, d.r
            else:
                k, r = 0, p
            yield {"n": n, "p": p, "k": k, "r": r,
                   "value": ev.value, "branch": ev.branch}


def main(argv=None) -> int:
    args = parse_args(argv)
    names = [s.strip() for s in args.families.split(",") if s.strip()]
    unknown = [s for s in names if s not in FAMILY_MAKERS]
    if unknown:
        print(f"unknown families: {', '.join(unknown)}", file=sys.stderr)
        return 2
    n_lo, _, n_hi = args.n.partition("..")
    rows_by_family = {
        name: list(sweep(FAMILY_MAKERS[name], int(n_lo), int(n_hi or n_lo), args.p))
        for name in names
    }

    if args.outdir is not None:
        args.outdir.mkdir(parents=True, exist_ok=True)
        for name, rows in rows_by_family.items():
            path = args.outdir / f"{name}_values.csv"
            with path.open("w", newline="") as fh:
                writer = csv.DictWriter(
                    fh, fieldnames=["n", "p", "k", "r", "value", "branch"])
                writer.writeheader()
                writer.writerows(rows)
            print(f"wrote {len(rows)} rows to {path}")
        return 0

    for name, rows in rows_by_family.items():
        if args.markdown:
            print(f"\n### {name}\n")
            print("| n | p | k | r | value | branch |")
            print("|---|---|---|---|-------|--------|")
            for row in rows:
                print("| {n} | {p} | {k} | {r} | {value} | {branch} |".format(**row))
        else:
            writer = csv.DictWriter(
                sys.stdout, fieldnames=["n", "p", "k", "r", "value", "branch"])
            writer.writeheader()
            writer.writerows(rows)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
