"""Typed access to the benchmark CSV emitted by ``hcmin bench``.

The schema is frozen on the producer side; this module is the single place
the consumer spells it out. Everything downstream works on ResultRow lists.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass

RESULTS_FIELDS = ("graph", "target", "in_degree", "budget", "algorithm",
                  "objective", "size", "time_ms", "seed")


class SchemaError(ValueError):
    """The CSV does not carry the expected benchmark header."""


@dataclass(frozen=True)
class ResultRow:
    graph: str
    target: int
    in_degree: int
    budget: int
    algorithm: str
    objective: float
    size: float
    time_ms: float
    seed: int

    @property
    def failed(self):
        """True for rows recording a run that errored (nan objective)."""
        return math.isnan(self.objective)


def load_results(path):
    """Parse a benchmark CSV into ResultRow objects, validating the header."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise SchemaError(f"{path}: empty file, expected header "
                              f"{','.join(RESULTS_FIELDS)}")
        if tuple(header) != RESULTS_FIELDS:
            missing = [c for c in RESULTS_FIELDS if c not in header]
            extra = [c for c in header if c not in RESULTS_FIELDS]
            raise SchemaError(
                f"{path}: header mismatch (missing {missing or 'none'}, "
                f"unexpected {extra or 'none'}); expected exactly "
                f"{','.join(RESULTS_FIELDS)}")
        rows = []
        for lineno, rec in enumerate(reader, start=2):
            if len(rec) != len(RESULTS_FIELDS):
                raise SchemaError(f"{path}:{lineno}: expected "
                                  f"{len(RESULTS_FIELDS)} fields, got "
                                  f"{len(rec)}")
            try:
                rows.append(ResultRow(
                    graph=rec[0], target=int(rec[1]), in_degree=int(rec[2]),
                    budget=int(rec[3]), algorithm=rec[4],
                    objective=float(rec[5]), size=float(rec[6]),
                    time_ms=float(rec[7]), seed=int(rec[8])))
            except ValueError as exc:
                raise SchemaError(f"{path}:{lineno}: {exc}") from exc
    return rows


def budget_for(frac, in_degree):
    """The budget the producer assigns to a fraction: floor(frac * degree)."""
    return int(frac * in_degree)
