"""Figures and summary tables for hcmin benchmark CSVs."""

from .figures import cumulative_curves, plot_cumulative, select_cell_rows
from .records import (RESULTS_FIELDS, ResultRow, SchemaError, budget_for,
                      load_results)
from .summary import (SUMMARY_FIELDS, ReferenceGapError, SummaryRow,
                      relative_table, table_relative)

__version__ = "0.1.0"

__all__ = [
    "RESULTS_FIELDS", "ResultRow", "SchemaError", "budget_for",
    "load_results", "cumulative_curves", "plot_cumulative",
    "select_cell_rows", "SUMMARY_FIELDS", "ReferenceGapError", "SummaryRow",
    "relative_table", "table_relative", "__version__",
]
