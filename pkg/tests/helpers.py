"""Shared test utilities: independent oracles and random instance generators.

The oracles here deliberately avoid the package's traversal code: plain
dict-of-sets adjacency walked with a deque, plus a Floyd-Warshall variant for
cross-checking on tiny graphs.
"""
from __future__ import annotations

from collections import deque

import numpy as np

from hcmin import DiGraph


def naive_distances(n, edges, v, removed=()):
    """BFS distances d(u, v) over predecessor sets; None means unreachable."""
    removed = set(removed)
    preds = {u: set() for u in range(n)}
    for a, b in edges:
        if (a, b) not in removed:
            preds[b].add(a)
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in preds[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return [dist.get(u) for u in range(n)]


def naive_harmonic(n, edges, v, removed=()):
    dist = naive_distances(n, edges, v, removed)
    return sum(1.0 / d for d in dist if d)


def naive_objective(graph, v, members):
    """Objective recomputed from the raw edge list, ignoring package BFS."""
    edges = [tuple(e) for e in graph.edges().tolist()]
    removed = {(w, v) for w in members}
    return naive_harmonic(graph.n, edges, v, removed)


def floyd_warshall(n, edges):
    """All-pairs distances with an inf sentinel; only for tiny graphs."""
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for a, b in edges:
        dist[a][b] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def analytic_projection(x, b):
    """Independent projection oracle: exact piecewise-linear root.

    The clamped mass sum(clip(x - lam, 0, 1)) is piecewise linear in lam
    with breakpoints at x_e - 1 and x_e, so the shift solving mass = b is
    found by scanning segments, no iteration involved.
    """
    x = np.asarray(x, dtype=float)
    y = np.clip(x, 0.0, 1.0)
    if y.sum() <= b:
        return y

    def mass(lam):
        return np.clip(x - lam, 0.0, 1.0).sum()

    bps = sorted({0.0, *np.maximum(x - 1.0, 0.0), *x[x > 0]})
    prev = bps[0]
    for bp in bps[1:]:
        if mass(bp) <= b:
            m_prev, m_cur = mass(prev), mass(bp)
            lam = prev + (m_prev - b) * (bp - prev) / (m_prev - m_cur)
            return np.clip(x - lam, 0.0, 1.0)
        prev = bp
    return np.clip(x - bps[-1], 0.0, 1.0)


def preferential_attachment(rng, n, c, smoothing=4, clique=10, chunk=500):
    """Heavy-tailed random digraph: each new vertex points at c earlier ones.

    Attachment targets are drawn from a pool holding one entry per previous
    edge head plus ``smoothing`` entries per vertex, so the pick probability
    is proportional to in-degree + smoothing; larger smoothing trades
    mega-hubs for a thicker band of mid-size hubs. Sampling is chunked for
    speed (the pool is frozen while a chunk of vertices is wired), which
    only flattens the tail slightly. Duplicate picks within a vertex are
    dropped by the DiGraph constructor.
    """
    heads = [np.repeat(np.arange(clique), clique - 1)]
    tails = [np.concatenate([np.delete(np.arange(clique), i)
                             for i in range(clique)])]
    pool = np.repeat(np.arange(clique), clique - 1 + smoothing)
    start = clique
    while start < n:
        stop = min(start + chunk, n)
        new = np.arange(start, stop)
        picks = pool[rng.integers(0, pool.size, size=(new.size, c))]
        tails.append(np.repeat(new, c))
        heads.append(picks.ravel())
        pool = np.concatenate([pool, picks.ravel(),
                               np.repeat(new, smoothing)])
        start = stop
    edges = np.stack([np.concatenate(tails), np.concatenate(heads)], axis=1)
    return DiGraph(n, edges)


def random_digraph(rng, n, p):
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    edges = np.argwhere(mask)
    if edges.shape[0] == 0:
        edges = np.array([(0, 1)])
    return DiGraph(n, edges)


def random_instance(rng, n_range=(12, 28), p=0.15, deg_range=(2, 10),
                    max_tries=200):
    """Random (graph, target, budget) with 1 <= budget < in-degree.

    The budget being strictly below the in-degree keeps the optimum
    positive (at least in_degree - budget predecessors survive at
    distance 1).
    """
    for _ in range(max_tries):
        n = int(rng.integers(*n_range))
        g = random_digraph(rng, n, p)
        degs = g.in_degrees()
        lo, hi = deg_range
        candidates = np.flatnonzero((degs >= lo) & (degs <= hi))
        if candidates.size == 0:
            continue
        v = int(candidates[int(rng.integers(0, candidates.size))])
        b = int(rng.integers(1, g.in_degree(v)))
        return g, v, b
    raise RuntimeError("could not draw a usable instance")
