"""Relative-value summary tables versus a reference algorithm.

Every (graph, target, budget) cell is normalized by the reference
algorithm's row in that cell, then ratios are averaged per graph and
algorithm. The reference must be present (and well-defined) in every cell;
a hole is reported explicitly instead of being silently skipped.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

from .records import load_results

SUMMARY_FIELDS = ("graph", "algorithm", "objective_ratio", "size_ratio",
                  "cells")


class ReferenceGapError(ValueError):
    """The reference algorithm is missing from one or more cells."""

    def __init__(self, reference, missing):
        self.reference = reference
        self.missing = list(missing)
        shown = ", ".join(f"({g}, target {t}, budget {b})"
                          for g, t, b in self.missing[:5])
        more = "" if len(self.missing) <= 5 else \
            f" and {len(self.missing) - 5} more"
        super().__init__(f"reference algorithm {reference!r} missing in "
                         f"{len(self.missing)} cells: {shown}{more}")


@dataclass(frozen=True)
class SummaryRow:
    graph: str
    algorithm: str
    objective_ratio: float
    size_ratio: float
    cells: int


def relative_table(rows, reference):
    """Per-(graph, algorithm) mean ratios against the reference algorithm.

    Failed rows (nan objective) are dropped first; a dropped reference row
    counts as a gap. Cells where the reference removed nothing or already
    sits at objective zero have no meaningful ratio and are rejected.
    """
    cells = {}
    for row in rows:
        if row.failed:
            continue
        key = (row.graph, row.target, row.budget)
        cell = cells.setdefault(key, {})
        if row.algorithm in cell:
            raise ValueError(f"duplicate rows for {row.algorithm!r} in cell "
                             f"{key}")
        cell[row.algorithm] = row
    missing = sorted(key for key, cell in cells.items()
                     if reference not in cell)
    if missing:
        raise ReferenceGapError(reference, missing)
    acc = {}
    for key, cell in sorted(cells.items()):
        ref = cell[reference]
        if ref.objective == 0.0:
            raise ValueError(f"reference objective is zero in cell {key}; "
                             "ratios are undefined")
        if ref.size == 0.0:
            raise ValueError(f"reference solution is empty in cell {key}; "
                             "size ratios are undefined")
        for alg, row in cell.items():
            bucket = acc.setdefault((row.graph, alg), [])
            bucket.append((row.objective / ref.objective,
                           row.size / ref.size))
    table = []
    for (graph, alg), ratios in sorted(acc.items()):
        objs = [r[0] for r in ratios]
        sizes = [r[1] for r in ratios]
        table.append(SummaryRow(graph, alg, sum(objs) / len(objs),
                                sum(sizes) / len(sizes), len(ratios)))
    return table


def table_relative(csv_path, reference_algorithm, out_csv):
    """Load a benchmark CSV, normalize by the reference, write the summary."""
    table = relative_table(load_results(csv_path), reference_algorithm)
    with open(out_csv, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SUMMARY_FIELDS)
        for row in table:
            writer.writerow([row.graph, row.algorithm,
                             f"{row.objective_ratio:.6g}",
                             f"{row.size_ratio:.6g}", str(row.cells)])
    return table
