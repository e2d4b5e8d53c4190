"""Reverse-BFS distances and harmonic centrality of a single vertex."""
from __future__ import annotations

import numpy as np

from .digraph import EdgeSubset, GraphView, as_view, restrict

UNREACHABLE = np.int32(-1)  # distance sentinel, outside the valid range


def _gather_neighbors(indptr, indices, frontier):
    starts = indptr[frontier]
    counts = indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return indices[:0]
    first = np.repeat(starts, counts)
    within = np.arange(total, dtype=np.int64) - np.repeat(
        np.cumsum(counts) - counts, counts)
    return indices[first + within]


def distances_to(g, v):
    """Distances d(u, v) for every u, as an int32 array; -1 is unreachable.

    Runs a level-synchronous BFS from v over reverse edges. On a view, the
    target's predecessor list is swapped for the surviving one, so removed
    in-edges are never traversed.
    """
    view = as_view(g)
    graph = view.graph
    graph._check_vertex(v)
    indptr = graph._in_indptr
    indices = graph._in_indices
    special = view.kept is not None
    target = view.target
    dist = np.full(graph.n, UNREACHABLE, dtype=np.int32)
    dist[v] = 0
    frontier = np.array([v], dtype=np.int64)
    d = 0
    while frontier.size:
        if special:
            # frontier stays sorted, so membership is a binary search
            pos = int(np.searchsorted(frontier, target))
            if pos < frontier.size and frontier[pos] == target:
                rest = np.delete(frontier, pos)
                neigh = np.concatenate(
                    [_gather_neighbors(indptr, indices, rest), view.kept])
            else:
                neigh = _gather_neighbors(indptr, indices, frontier)
        else:
            neigh = _gather_neighbors(indptr, indices, frontier)
        if neigh.size == 0:
            break
        fresh = neigh[dist[neigh] == UNREACHABLE]
        if fresh.size == 0:
            break
        d += 1
        dist[fresh] = d
        frontier = np.flatnonzero(dist == d)
    return dist


def harmonic(g, v):
    """Harmonic centrality of v: sum of 1/d(u, v) over u != v.

    Unreachable vertices contribute nothing. The sum is accumulated per
    distance level in ascending order, which makes the result independent
    of vertex enumeration order.
    """
    dist = distances_to(g, v)
    reachable = dist[dist > 0]
    if reachable.size == 0:
        return 0.0
    counts = np.bincount(reachable)
    total = 0.0
    for d in range(1, counts.size):
        if counts[d]:
            total += int(counts[d]) / d
    return total


def objective(graph, v, removed):
    """Harmonic centrality of v after removing the given incoming edges."""
    if removed.target != v:
        raise ValueError(
            f"subset targets vertex {removed.target}, objective asked for {v}")
    return harmonic(restrict(graph, removed), v)


def residual_scores(graph, v):
    """Residual harmonic score of each predecessor of v.

    The score of w is the harmonic centrality of w in the graph with every
    incoming edge of v removed; one BFS per predecessor.
    """
    preds = graph.in_neighbors(v)
    stripped = GraphView._from_kept(graph, v, preds[:0])
    return {int(w): harmonic(stripped, int(w)) for w in preds}
