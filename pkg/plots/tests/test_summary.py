import csv

import pytest

from conftest import make_row
from hcplots import (ReferenceGapError, SUMMARY_FIELDS, relative_table,
                     table_relative)


def _cell(graph="g.txt", target=1, budget=4, **algs):
    """Rows for one cell: algs maps algorithm -> (objective, size)."""
    return [make_row(graph=graph, target=target, budget=budget, algorithm=a,
                     objective=o, size=s) for a, (o, s) in algs.items()]


def test_reference_against_itself_is_all_ones():
    rows = _cell(topb=(10.0, 4.0), greedy=(8.0, 4.0))
    rows += _cell(target=2, topb=(20.0, 4.0), greedy=(30.0, 4.0))
    table = relative_table(rows, "topb")
    ref = [r for r in table if r.algorithm == "topb"]
    assert len(ref) == 1
    assert ref[0].objective_ratio == 1.0
    assert ref[0].size_ratio == 1.0
    assert ref[0].cells == 2


def test_ratios_average_over_cells():
    rows = _cell(topb=(10.0, 4.0), greedy=(20.0, 2.0))
    rows += _cell(target=2, topb=(10.0, 4.0), greedy=(40.0, 2.0))
    table = relative_table(rows, "topb")
    greedy = next(r for r in table if r.algorithm == "greedy")
    assert greedy.objective_ratio == pytest.approx(3.0)
    assert greedy.size_ratio == pytest.approx(0.5)


def test_empty_solution_gets_zero_size_ratio():
    rows = _cell(topb=(10.0, 4.0), empty=(25.0, 0.0))
    table = relative_table(rows, "topb")
    empty = next(r for r in table if r.algorithm == "empty")
    assert empty.size_ratio == 0.0


def test_missing_reference_cell_is_reported():
    rows = _cell(topb=(10.0, 4.0), greedy=(8.0, 4.0))
    rows += _cell(target=2, greedy=(8.0, 4.0))
    with pytest.raises(ReferenceGapError, match=r"target 2"):
        relative_table(rows, "topb")


def test_zero_reference_objective_rejected():
    rows = _cell(topb=(0.0, 4.0), greedy=(8.0, 4.0))
    with pytest.raises(ValueError, match="objective is zero"):
        relative_table(rows, "topb")


def test_zero_reference_size_rejected():
    rows = _cell(topb=(10.0, 0.0), greedy=(8.0, 4.0))
    with pytest.raises(ValueError, match="solution is empty"):
        relative_table(rows, "topb")


def test_duplicate_cell_rows_rejected():
    rows = _cell(topb=(10.0, 4.0)) + _cell(topb=(11.0, 4.0))
    with pytest.raises(ValueError, match="duplicate"):
        relative_table(rows, "topb")


def test_failed_reference_row_counts_as_gap():
    rows = _cell(topb=(float("nan"), 4.0), greedy=(8.0, 4.0))
    with pytest.raises(ReferenceGapError):
        relative_table(rows, "topb")


def test_table_relative_writes_csv(fixture_csv, tmp_path):
    out = tmp_path / "summary.csv"
    table = table_relative(fixture_csv, "topb", out)
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(SUMMARY_FIELDS)
    assert len(rows) == 1 + len(table)
    # 2 graphs x 6 algorithms
    assert len(table) == 12
