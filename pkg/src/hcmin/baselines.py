"""Baseline edge-removal strategies: empty, random, degree, greedy."""
from __future__ import annotations

import math
import warnings

import numpy as np

from .centrality import objective
from .digraph import EdgeSubset


def clamped_budget(graph, v, b):
    """Validate a budget against the target's in-degree, clamping with a warning."""
    if b < 0:
        raise ValueError("budget must be nonnegative")
    d = graph.in_degree(v)
    if b > d:
        warnings.warn(
            f"budget {b} exceeds in-degree {d} of vertex {v}; clamped",
            RuntimeWarning, stacklevel=3)
        return d
    return int(b)


def empty_baseline(graph, v, b):
    """Remove nothing."""
    graph._check_vertex(v)
    return EdgeSubset(v, frozenset())


def random_baseline(graph, v, b, seed=0):
    """Uniformly random subset of b incoming edges."""
    b = clamped_budget(graph, v, b)
    preds = graph.in_neighbors(v)
    rng = np.random.Generator(np.random.Philox(seed))
    pick = rng.choice(preds, size=b, replace=False)
    return EdgeSubset(v, frozenset(int(w) for w in pick))


def degree_baseline(graph, v, b):
    """Remove edges from the b predecessors of largest in-degree.

    In-degrees are counted in the full graph; ties go to the smaller id.
    """
    b = clamped_budget(graph, v, b)
    preds = graph.in_neighbors(v).astype(np.int64)
    degs = graph.in_degrees()[preds]
    order = np.lexsort((preds, -degs))
    return EdgeSubset(v, frozenset(int(w) for w in preds[order[:b]]))


def greedy(graph, v, b):
    """Remove b incoming edges one at a time, always the current best.

    Every round re-evaluates the objective for every remaining candidate;
    marginal gains are not cached between rounds. Ties go to the lowest
    predecessor id. Cost is b * |preds| full evaluations.
    """
    b = clamped_budget(graph, v, b)
    remaining = [int(w) for w in graph.in_neighbors(v)]
    chosen = set()
    for _ in range(b):
        best_w = None
        best_val = math.inf
        for w in remaining:
            val = objective(graph, v, EdgeSubset(v, frozenset(chosen | {w})))
            if val < best_val:
                best_val = val
                best_w = w
        chosen.add(best_w)
        remaining.remove(best_w)
    return EdgeSubset(v, frozenset(chosen))
