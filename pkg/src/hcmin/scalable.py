"""Residual-score ranking: the cheap near-optimal removal rule.

Rank the target's predecessors by their harmonic score in the graph with all
of the target's in-edges removed, then cut the top b. One BFS per
predecessor, independent of b.
"""
from __future__ import annotations

from .baselines import clamped_budget
from .centrality import residual_scores
from .digraph import EdgeSubset


def rank_neighbors(graph, v):
    """Predecessors of v with residual scores, best first.

    Sorted by descending score, ties broken by ascending vertex id.
    """
    scores = residual_scores(graph, v)
    return sorted(scores.items(), key=lambda item: (-item[1], item[0]))


def top_b_cut(graph, v, b):
    """Remove the b incoming edges whose sources have the largest residual scores.

    When b covers the whole in-neighborhood the full set is returned without
    computing any scores (the objective is 0 regardless of order).
    """
    b = clamped_budget(graph, v, b)
    preds = graph.in_neighbors(v)
    if b >= preds.size:
        return EdgeSubset(v, frozenset(int(w) for w in preds))
    ranked = rank_neighbors(graph, v)
    return EdgeSubset(v, frozenset(w for w, _ in ranked[:b]))
