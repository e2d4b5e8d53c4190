"""Cumulative solution-quality figures.

For a fixed graph and budget fraction, each algorithm's rows are reduced to
the ascending sequence of objective values it achieved across targets. Read
as: to cover x targets, the algorithm needs an objective threshold of y. An
algorithm drawing a lower line is better.
"""
from __future__ import annotations

from matplotlib.figure import Figure

from .records import budget_for, load_results

_MARKERS = ("o", "s", "^", "v", "D", "x", "*", "P")


def select_cell_rows(rows, graph_name, budget_frac):
    """Rows of one (graph, budget fraction) cell, failed runs dropped.

    The CSV stores absolute budgets; a row belongs to the fraction when its
    budget equals the floor of fraction times its own in-degree.
    """
    picked = [r for r in rows
              if r.graph == graph_name
              and r.budget == budget_for(budget_frac, r.in_degree)
              and not r.failed]
    if not picked:
        raise ValueError(f"no rows for graph {graph_name!r} at budget "
                         f"fraction {budget_frac:g}")
    return picked


def cumulative_curves(rows):
    """Per-algorithm ascending objective thresholds, keyed in sorted order.

    The i-th value is the threshold below or at which the algorithm keeps
    i + 1 of the targets, so every curve is monotone nondecreasing.
    """
    grouped = {}
    for row in rows:
        if not row.failed:
            grouped.setdefault(row.algorithm, []).append(row.objective)
    return {alg: sorted(vals) for alg, vals in sorted(grouped.items())}


def plot_cumulative(csv_path, graph_name, budget_frac, out_image):
    """Render one figure for a (graph, budget fraction) cell.

    Styling is deterministic: algorithms are drawn in name order with a
    fixed marker and default color cycle, so rerenders are identical.
    """
    rows = load_results(csv_path)
    curves = cumulative_curves(select_cell_rows(rows, graph_name,
                                                budget_frac))
    fig = Figure(figsize=(5.2, 3.6))
    ax = fig.subplots()
    for i, (alg, vals) in enumerate(curves.items()):
        counts = range(1, len(vals) + 1)
        ax.step(counts, vals, where="post", label=alg,
                marker=_MARKERS[i % len(_MARKERS)], markersize=4,
                linewidth=1.2)
    ax.set_xlabel("number of targets at or below threshold")
    ax.set_ylabel("objective threshold")
    ax.set_title(f"{graph_name}, budget fraction {budget_frac:g}")
    ax.legend(title="lower line is better", fontsize=8, title_fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.savefig(out_image, dpi=150, bbox_inches="tight")
    return out_image
