"""Command line front end: hcplots {cumulative,table}."""
from __future__ import annotations

import argparse

from .figures import plot_cumulative
from .summary import table_relative


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hcplots",
        description="Figures and summary tables from hcmin benchmark CSVs.")
    sub = parser.add_subparsers(dest="command", required=True)

    cum = sub.add_parser(
        "cumulative",
        help="per-algorithm cumulative objective curves for one cell")
    cum.add_argument("csv", help="benchmark CSV from hcmin bench")
    cum.add_argument("--graph", required=True,
                     help="graph name as recorded in the CSV")
    cum.add_argument("--budget-frac", type=float, required=True,
                     help="budget fraction the cell was run at")
    cum.add_argument("--out", required=True, help="output image path")

    tab = sub.add_parser(
        "table", help="mean objective/size ratios versus a reference")
    tab.add_argument("csv", help="benchmark CSV from hcmin bench")
    tab.add_argument("--reference", default="topb",
                     help="algorithm to normalize against (default: topb)")
    tab.add_argument("--out", required=True, help="output summary CSV path")

    args = parser.parse_args(argv)
    if args.command == "cumulative":
        plot_cumulative(args.csv, args.graph, args.budget_frac, args.out)
        print(f"wrote {args.out}")
    else:
        table = table_relative(args.csv, args.reference, args.out)
        print(f"wrote {len(table)} summary rows to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
