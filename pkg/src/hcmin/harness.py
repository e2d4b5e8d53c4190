"""Experiment harness: hard instance generators, brute force, batch runner."""
from __future__ import annotations

import csv
import itertools
import math
import time
import warnings
from dataclasses import dataclass

import numpy as np

from .baselines import degree_baseline, empty_baseline, greedy, random_baseline
from .centrality import harmonic, objective
from .digraph import DiGraph, EdgeSubset
from .relaxation import PsmConfig, psm_minimize, round_solution
from .scalable import top_b_cut

RESULTS_FIELDS = ("graph", "target", "in_degree", "budget", "algorithm",
                  "objective", "size", "time_ms", "seed")

ALGORITHMS = ("empty", "random", "degree", "greedy", "topb", "bicriteria")


@dataclass(frozen=True)
class KUnionInstance:
    """Cover-style instance: pick k of the sets whose union is smallest.

    ``universe`` is the ground-set size; elements are 0..universe-1. Every
    element must appear in at least one set.
    """

    universe: int
    sets: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sets",
                           tuple(frozenset(int(e) for e in s)
                                 for s in self.sets))
        if not 1 <= self.k <= len(self.sets):
            raise ValueError("k must lie in [1, number of sets]")
        covered = set().union(*self.sets) if self.sets else set()
        if covered != set(range(self.universe)):
            raise ValueError("sets must cover exactly the universe")


def gadget_kunion(instance):
    """Three-layer gadget whose removal problem mirrors the k-union problem.

    Layout: vertex 0 is the target; vertices 1..m stand for the sets, each
    with an edge into the target; vertices m+1..m+n stand for the elements,
    each with an edge into every set containing it. Keeping k set-edges
    (removing b = m - k of them) leaves an objective of
    (m - b) + |union of the kept sets| / 2.

    Returns (graph, target, budget).
    """
    m = len(instance.sets)
    n = instance.universe
    edges = [(j + 1, 0) for j in range(m)]
    for j, s in enumerate(instance.sets):
        for e in sorted(s):
            edges.append((m + 1 + e, j + 1))
    graph = DiGraph(1 + m + n, np.array(edges, dtype=np.int64))
    return graph, 0, m - instance.k


def gadget_greedy_adversarial(k):
    """Instance family (k >= 2) where greedy overshoots the optimum.

    One left predecessor feeds the target and is fed by a single outer
    vertex; k right predecessors feed the target and share k outer vertices
    in a complete bipartite pattern. Greedy's first pick is the left edge
    (it alone drops the objective by 3/2), after which the budget only
    covers k - 1 of the k right edges; cutting all right edges was optimal.

    Layout: target 0, left predecessor 1, its outer vertex 2, right
    predecessors 3..k+2, right outer vertices k+3..2k+2. Budget is k.
    """
    if k < 2:
        raise ValueError("family needs k >= 2")
    edges = [(1, 0), (2, 1)]
    right = list(range(3, 3 + k))
    outer = list(range(3 + k, 3 + 2 * k))
    edges.extend((r, 0) for r in right)
    edges.extend((o, r) for o in outer for r in right)
    graph = DiGraph(3 + 2 * k, np.array(edges, dtype=np.int64))
    return graph, 0, k


def gadget_topb_adversarial(k):
    """Instance family (k >= 2) where residual-score ranking is misled.

    k left predecessors each have k - 1 private feeders; k right
    predecessors share k feeders in a complete bipartite pattern. Right
    predecessors carry residual score k versus k - 1 on the left, so the
    ranking cut removes the right edges, stranding only k feeders; removing
    the left edges would have stranded k(k-1) of them.

    Layout: target 0, left predecessors 1..k, right predecessors k+1..2k,
    right feeders 2k+1..3k, left feeders 3k+1..3k+k(k-1) chunked k-1 per
    left predecessor. Budget is k.
    """
    if k < 2:
        raise ValueError("family needs k >= 2")
    left = list(range(1, k + 1))
    right = list(range(k + 1, 2 * k + 1))
    right_outer = list(range(2 * k + 1, 3 * k + 1))
    edges = [(w, 0) for w in left]
    edges.extend((w, 0) for w in right)
    edges.extend((o, r) for o in right_outer for r in right)
    base = 3 * k + 1
    for j, w in enumerate(left):
        for i in range(k - 1):
            edges.append((base + j * (k - 1) + i, w))
    graph = DiGraph(base + k * (k - 1), np.array(edges, dtype=np.int64))
    return graph, 0, k


class WorkCapExceeded(ValueError):
    """Brute force would exceed its configured work budget."""


def brute_force_opt(graph, v, b, work_cap=10 ** 8, all_sizes=False):
    """Exact optimum by enumeration of removal subsets.

    Enumerates subsets of size exactly min(b, in-degree); the objective never
    increases when edges are added, so smaller subsets cannot win
    (``all_sizes=True`` enumerates every size up to b anyway). Candidates
    are visited in lexicographic predecessor order and ties keep the first
    minimum. Estimated work C(d, b) * (n + m) is checked against
    ``work_cap`` before starting.

    Returns (subset, objective value).
    """
    preds = [int(w) for w in graph.in_neighbors(v)]
    d = len(preds)
    b = min(int(b), d)
    work = math.comb(d, b) * (graph.n + graph.edge_count)
    if work > work_cap:
        raise WorkCapExceeded(
            f"estimated work {work:.3g} exceeds cap {work_cap:.3g}")
    sizes = range(b + 1) if all_sizes else (b,)
    best = None
    best_val = math.inf
    for size in sizes:
        for combo in itertools.combinations(preds, size):
            val = objective(graph, v, EdgeSubset(v, frozenset(combo)))
            if val < best_val:
                best_val = val
                best = combo
    return EdgeSubset(v, frozenset(best)), best_val


def select_targets(graph, min_indegree=100, count=20, seed=0):
    """Uniform sample of targets whose in-degree meets the threshold.

    Deterministic for a given seed. When fewer than ``count`` vertices
    qualify, all of them are returned with a warning.
    """
    qualifying = np.flatnonzero(graph.in_degrees() >= min_indegree)
    if qualifying.size <= count:
        if qualifying.size < count:
            warnings.warn(
                f"only {qualifying.size} vertices have in-degree >= "
                f"{min_indegree}; returning all of them", RuntimeWarning,
                stacklevel=2)
        return [int(v) for v in qualifying]
    rng = np.random.Generator(np.random.Philox(seed))
    pick = rng.choice(qualifying, size=count, replace=False)
    return [int(v) for v in pick]


@dataclass(frozen=True)
class ResultRecord:
    """One experiment cell; targets are reported under their original ids."""

    graph: str
    target: int
    in_degree: int
    budget: int
    algorithm: str
    objective: float
    size: float
    time_ms: float
    seed: int

    def to_row(self):
        return [self.graph, str(self.target), str(self.in_degree),
                str(self.budget), self.algorithm,
                f"{self.objective:.12g}", f"{self.size:.12g}",
                f"{self.time_ms:.3f}", str(self.seed)]


def write_results_csv(records, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(RESULTS_FIELDS)
        for rec in records:
            writer.writerow(rec.to_row())


def _run_cell(graph, v, b, algorithm, seed, alpha, iters, random_repeats,
              rounding_trials):
    """Objective and solution size for one (target, budget, algorithm) cell.

    Randomized algorithms are averaged: ``random`` over ``random_repeats``
    fresh draws, ``bicriteria`` over ``rounding_trials`` roundings of a
    single relaxation solve.
    """
    if algorithm == "empty":
        f = empty_baseline(graph, v, b)
        return objective(graph, v, f), float(len(f))
    if algorithm == "random":
        vals = []
        for i in range(random_repeats):
            f = random_baseline(graph, v, b, seed=seed + i)
            vals.append(objective(graph, v, f))
        return float(np.mean(vals)), float(min(b, graph.in_degree(v)))
    if algorithm == "degree":
        f = degree_baseline(graph, v, b)
    elif algorithm == "greedy":
        f = greedy(graph, v, b)
    elif algorithm == "topb":
        f = top_b_cut(graph, v, b)
    elif algorithm == "bicriteria":
        trace = psm_minimize(graph, v, b, PsmConfig(max_iters=iters))
        vals = []
        sizes = []
        for i in range(rounding_trials):
            f = round_solution(graph, v, trace.best_point, alpha,
                               seed=seed + i)
            vals.append(objective(graph, v, f))
            sizes.append(len(f))
        return float(np.mean(vals)), float(np.mean(sizes))
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return objective(graph, v, f), float(len(f))


def run_experiment(graph, name, targets, budget_fracs, algorithms, seed=0,
                   time_limit_secs=3600.0, alpha=0.5, iters=1000,
                   random_repeats=100, rounding_trials=100):
    """Run every (algorithm, budget fraction, target) cell and collect records.

    Budgets are ``floor(frac * in_degree)``; cells where that is zero are
    skipped with a warning. For each (algorithm, fraction) pair the targets
    are probed in decreasing in-degree order, and if the largest one takes
    longer than ``time_limit_secs`` the remaining targets are skipped for
    that pair. A failing cell is recorded with a NaN objective rather than
    aborting the batch.
    """
    ordered = sorted(targets, key=lambda v: (-graph.in_degree(v), v))
    records = []
    for algorithm in algorithms:
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}")
        for frac in budget_fracs:
            skipping = False
            for idx, v in enumerate(ordered):
                d = graph.in_degree(v)
                b = int(frac * d)
                if b < 1:
                    warnings.warn(
                        f"fraction {frac} of in-degree {d} gives budget 0; "
                        f"skipping target {graph.original_id(v)}",
                        RuntimeWarning, stacklevel=2)
                    continue
                if skipping:
                    continue
                start = time.perf_counter()
                try:
                    obj, size = _run_cell(graph, v, b, algorithm, seed, alpha,
                                          iters, random_repeats,
                                          rounding_trials)
                except Exception as exc:  # record the failure, keep going
                    warnings.warn(f"{algorithm} failed on target "
                                  f"{graph.original_id(v)}: {exc}",
                                  RuntimeWarning, stacklevel=2)
                    obj, size = float("nan"), 0.0
                elapsed = time.perf_counter() - start
                records.append(ResultRecord(
                    graph=name, target=graph.original_id(v), in_degree=d,
                    budget=b, algorithm=algorithm, objective=obj, size=size,
                    time_ms=elapsed * 1000.0, seed=seed))
                if idx == 0 and elapsed > time_limit_secs:
                    skipping = True
    return records
