"""Convex relaxation of the edge-removal problem and its bicriteria rounding.

The objective extends from subsets of the target's in-edges to the unit box
via the standard piecewise-linear (Lovasz) extension, which is convex because
the set function is submodular. The extension is minimized over
``{x in [0,1]^m : sum(x) <= b}`` by a projected subgradient method, and the
fractional minimizer is rounded by a random threshold. Coordinates follow the
canonical edge order: ascending predecessor id.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .centrality import harmonic
from .digraph import EdgeSubset, GraphView

# Constant in the subgradient method's suboptimality bound and in the
# iteration count needed for a requested additive error.
RATE_CONSTANT = 2.0 * (1.0 + math.log(3.0))


@dataclass(frozen=True)
class BudgetedBox:
    """Feasible region: unit box intersected with an L1 ball of radius budget."""

    budget: int
    dim: int

    def contains(self, x, tol=1e-9):
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            return False
        return bool((x >= -tol).all() and (x <= 1.0 + tol).all()
                    and x.sum() <= self.budget + tol)


def project_box(x):
    """Nearest point of the unit box (coordinatewise clamp)."""
    return np.clip(np.asarray(x, dtype=float), 0.0, 1.0)


def budget_slack(x, lam):
    """Box-clamped mass after a uniform downward shift: sum(clamp(x - lam)).

    Nonincreasing in lam; the projection root-finds where it meets the budget.
    """
    return float(np.clip(x - lam, 0.0, 1.0).sum())


def project_budgeted_box(x, region, tol=1e-12):
    """Euclidean projection onto a BudgetedBox.

    Clamp to the box first; if the budget is still exceeded, shift all
    coordinates down by the root of the nonincreasing function
    ``lam -> sum(clamp(x - lam)) - budget`` and clamp again. The root is
    bracketed in ``[0, max(x)]`` and located by bisection, so the result
    meets the budget up to ``dim * tol``.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (region.dim,):
        raise ValueError(f"expected {region.dim} coordinates, got {x.shape}")
    y = np.clip(x, 0.0, 1.0)
    if y.sum() <= region.budget:
        return y
    lo = 0.0
    hi = float(x.max())
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # bracket hit float resolution
            break
        if budget_slack(x, mid) > region.budget:
            lo = mid
        else:
            hi = mid
    return np.clip(x - 0.5 * (lo + hi), 0.0, 1.0)


def _chain_values(graph, v, x):
    """Objective values along the sorted-coordinate prefix chain.

    Coordinates are ordered by descending value, ties by ascending edge
    index. Returns (order, vals) where vals[i] is the objective after
    removing the first i edges of the chain; m + 1 BFS evaluations.
    """
    preds = graph.in_neighbors(v)
    m = preds.size
    x = np.asarray(x, dtype=float)
    if x.shape != (m,):
        raise ValueError(f"expected {m} coordinates, got {x.shape}")
    order = np.argsort(-x, kind="stable")
    vals = np.empty(m + 1)
    vals[0] = harmonic(graph, v)
    for i in range(m):
        kept = np.delete(preds, order[:i + 1])
        vals[i + 1] = harmonic(GraphView._from_kept(graph, v, kept), v)
    return order, vals


def _check_box(x):
    x = np.asarray(x, dtype=float)
    if x.size and (x.min() < -1e-12 or x.max() > 1.0 + 1e-12):
        raise ValueError("point lies outside the unit box")
    return x


def _value_and_subgradient(graph, v, x):
    x = np.asarray(x, dtype=float)
    order, vals = _chain_values(graph, v, x)
    m = order.size
    if m == 0:
        return float(vals[0]), np.empty(0)
    xs = x[order]
    weights = np.empty(m + 1)
    weights[0] = 1.0 - xs[0]
    weights[1:m] = xs[:-1] - xs[1:]
    weights[m] = xs[-1]
    g = np.empty(m)
    g[order] = np.diff(vals)
    return float(np.dot(weights, vals)), g


def lovasz_value(graph, v, x):
    """Piecewise-linear extension of the removal objective at a box point.

    Agrees with the set objective on indicator vectors and is convex in x.
    """
    value, _ = _value_and_subgradient(graph, v, _check_box(x))
    return value


def lovasz_subgradient(graph, v, x):
    """A subgradient of the extension at x: chain differences of the objective.

    Every component is nonpositive (removing an edge never raises the
    objective) and the components sum to minus the intact harmonic
    centrality of v.
    """
    _, g = _value_and_subgradient(graph, v, _check_box(x))
    return g


def iterations_for_error(lipschitz, theta, eps_prime):
    """Iterations guaranteeing the best value is within eps_prime of optimal."""
    if eps_prime <= 0:
        raise ValueError("eps_prime must be positive")
    radius = RATE_CONSTANT * lipschitz * math.sqrt(2.0 * theta) / eps_prime
    return max(1, math.ceil(radius * radius - 2.0))


def suboptimality_bound(lipschitz, theta, t):
    """Guaranteed gap of the best value after t steps (valid for t >= 2)."""
    return RATE_CONSTANT * lipschitz * math.sqrt(2.0 * theta) / math.sqrt(t + 2.0)


@dataclass
class PsmConfig:
    """Knobs for the projected subgradient run.

    ``theta`` bounds half the squared diameter of the feasible region and
    ``lipschitz`` bounds the subgradient norm; both are derived from the
    instance when left unset (theta = min(b, m/2), lipschitz = value at the
    empty removal). ``epsilon_prime``, when set, replaces ``max_iters`` with
    the iteration count guaranteeing that additive error.
    """

    theta: float | None = None
    lipschitz: float | None = None
    max_iters: int = 1000
    bisection_tol: float = 1e-12
    epsilon_prime: float | None = None


@dataclass
class PsmTrace:
    """Result of a subgradient run, with the per-iteration value log."""

    best_value: float
    best_point: np.ndarray
    iterations: int
    log: list = field(default_factory=list)  # (t, value, best_value) rows

    def write_csv(self, path):
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t", "value", "best_value"])
            for t, value, best in self.log:
                writer.writerow([t, f"{value:.12g}", f"{best:.12g}"])


def psm_minimize(graph, v, budget, config=None, x0=None):
    """Minimize the extension over the budgeted box by projected subgradient.

    Steps are ``sqrt(2 theta) / (L sqrt(t + 1))``; every iterate is projected
    back onto the region. Iterates start at the origin unless ``x0`` is
    given. The value log covers t = 0 through the final iterate.
    """
    if config is None:
        config = PsmConfig()
    graph._check_vertex(v)
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    m = graph.in_degree(v)
    region = BudgetedBox(budget, m)
    theta = config.theta if config.theta is not None else min(budget, m / 2.0)
    if x0 is None:
        x = np.zeros(m)
    else:
        x = project_budgeted_box(np.asarray(x0, dtype=float), region,
                                 config.bisection_tol)
    lipschitz = (config.lipschitz if config.lipschitz is not None
                 else harmonic(graph, v))
    if lipschitz == 0.0 or m == 0:
        # Objective is identically zero over the region; nothing to iterate.
        return PsmTrace(0.0, x.copy(), 0, [(0, 0.0, 0.0)])
    if config.epsilon_prime is not None:
        total = iterations_for_error(lipschitz, theta, config.epsilon_prime)
    else:
        total = config.max_iters
    scale = math.sqrt(2.0 * theta) / lipschitz
    log = []
    best_value = math.inf
    best_point = x.copy()
    for t in range(total):
        value, g = _value_and_subgradient(graph, v, x)
        if value < best_value:
            best_value = value
            best_point = x.copy()
        log.append((t, value, best_value))
        step = scale / math.sqrt(t + 1.0)
        x = project_budgeted_box(x - step * g, region, config.bisection_tol)
    value, _ = _value_and_subgradient(graph, v, x)
    if value < best_value:
        best_value = value
        best_point = x.copy()
    log.append((total, value, best_value))
    return PsmTrace(best_value, best_point, total, log)


def round_solution(graph, v, x_star, alpha, seed=0):
    """Threshold rounding of a fractional point.

    Draws p uniformly from [alpha, 1) as ``alpha + (1 - alpha) * u`` and keeps
    the edges with ``x >= p``. In expectation the rounded set has at most
    budget/alpha edges and objective at most the fractional value divided by
    (1 - alpha).
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    preds = graph.in_neighbors(v)
    x_star = np.asarray(x_star, dtype=float)
    if x_star.shape != (preds.size,):
        raise ValueError(f"expected {preds.size} coordinates")
    if x_star.size and (x_star.min() < -1e-9 or x_star.max() > 1.0 + 1e-9):
        raise ValueError("fractional point lies outside the unit box")
    rng = np.random.Generator(np.random.Philox(seed))
    p = alpha + (1.0 - alpha) * rng.random()
    keep = preds[x_star >= p]
    return EdgeSubset(v, frozenset(int(w) for w in keep))


def bicriteria_solve(graph, v, budget, alpha, epsilon=None, max_iters=None,
                     seed=0, x0=None):
    """Relax, minimize, round: budget may overshoot by 1/alpha in expectation.

    ``epsilon`` requests an additive error on the expected objective and is
    translated into an iteration count; an explicit ``max_iters`` takes that
    role instead when given. Defaults to 1000 iterations from the origin.
    """
    config = PsmConfig()
    if max_iters is not None:
        config.max_iters = max_iters
    elif epsilon is not None:
        config.epsilon_prime = (1.0 - alpha) * epsilon
    if graph.in_degree(v) == 0:
        return EdgeSubset(v, frozenset())
    trace = psm_minimize(graph, v, budget, config, x0=x0)
    return round_solution(graph, v, trace.best_point, alpha, seed)
