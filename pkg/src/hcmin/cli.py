"""Command line interface: solve, bench, gadget, oracle, trace."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .baselines import degree_baseline, empty_baseline, greedy, random_baseline
from .centrality import objective
from .digraph import DiGraph, load_edge_list, to_edge_list_text
from .harness import (ALGORITHMS, KUnionInstance, brute_force_opt,
                      gadget_greedy_adversarial, gadget_kunion,
                      gadget_topb_adversarial, run_experiment, select_targets,
                      write_results_csv)
from .relaxation import PsmConfig, bicriteria_solve, psm_minimize
from .scalable import top_b_cut


def _resolve_target(graph, original):
    try:
        return graph.dense_id(original)
    except KeyError:
        raise SystemExit(f"error: unknown vertex id {original}")


def _resolve_budget(graph, v, args):
    if args.budget is not None:
        return args.budget
    b = int(args.budget_frac * graph.in_degree(v))
    if b < 1:
        raise SystemExit(
            f"error: fraction {args.budget_frac} of in-degree "
            f"{graph.in_degree(v)} gives budget 0")
    return b


def _print_solution(graph, v, subset):
    for w, _ in subset.edges():
        print(f"{graph.original_id(w)} {graph.original_id(v)}")
    print(f"objective {objective(graph, v, subset):.12g}")


def _cmd_solve(args):
    graph = load_edge_list(args.graph)
    v = _resolve_target(graph, args.target)
    b = _resolve_budget(graph, v, args)
    if args.algo == "empty":
        subset = empty_baseline(graph, v, b)
    elif args.algo == "random":
        subset = random_baseline(graph, v, b, seed=args.seed)
    elif args.algo == "degree":
        subset = degree_baseline(graph, v, b)
    elif args.algo == "greedy":
        subset = greedy(graph, v, b)
    elif args.algo == "topb":
        subset = top_b_cut(graph, v, b)
    else:
        subset = bicriteria_solve(graph, v, b, args.alpha,
                                  max_iters=args.iters, seed=args.seed)
    _print_solution(graph, v, subset)
    return 0


def _cmd_bench(args):
    graph = load_edge_list(args.graph)
    if args.targets == "auto":
        targets = select_targets(graph, min_indegree=args.min_indegree,
                                 count=args.target_count, seed=args.seed)
    else:
        targets = [_resolve_target(graph, int(tok))
                   for tok in args.targets.split(",") if tok]
    fracs = [float(tok) for tok in args.budget_fracs.split(",") if tok]
    algos = [tok for tok in args.algos.split(",") if tok]
    records = run_experiment(graph, args.name, targets, fracs, algos,
                             seed=args.seed,
                             time_limit_secs=args.time_limit_secs,
                             alpha=args.alpha, iters=args.iters)
    write_results_csv(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _default_kunion_instance(k, seed):
    """Deterministic random cover instance: 2k sets over a 3k universe."""
    rng = np.random.Generator(np.random.Philox(seed))
    universe = 3 * k
    nsets = max(2 * k, 2)
    sets = []
    for _ in range(nsets):
        size = int(rng.integers(1, max(2, universe // 2)))
        sets.append(set(int(e) for e in
                        rng.choice(universe, size=size, replace=False)))
    covered = set().union(*sets)
    for e in range(universe):
        if e not in covered:
            sets[int(rng.integers(0, nsets))].add(e)
    return KUnionInstance(universe, tuple(frozenset(s) for s in sets), k)


def _cmd_gadget(args):
    if args.kind == "kunion":
        graph, v, b = gadget_kunion(_default_kunion_instance(args.k,
                                                             args.seed))
    elif args.kind == "greedy-adv":
        graph, v, b = gadget_greedy_adversarial(args.k)
    else:
        graph, v, b = gadget_topb_adversarial(args.k)
    text = to_edge_list_text(graph)
    sidecar = f"target={graph.original_id(v)} budget={b}\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        with open(args.out + ".meta", "w") as fh:
            fh.write(sidecar)
        print(f"wrote {graph.n} vertices / {graph.edge_count} edges "
              f"to {args.out} (+.meta)")
    else:
        sys.stdout.write(text)
        sys.stderr.write(sidecar)
    return 0


def _cmd_oracle(args):
    graph = load_edge_list(args.graph)
    v = _resolve_target(graph, args.target)
    subset, _ = brute_force_opt(graph, v, args.budget,
                                work_cap=args.work_cap)
    _print_solution(graph, v, subset)
    return 0


def _cmd_trace(args):
    graph = load_edge_list(args.graph)
    v = _resolve_target(graph, args.target)
    trace = psm_minimize(graph, v, args.budget,
                         PsmConfig(max_iters=args.iters))
    trace.write_csv(args.out)
    print(f"best value {trace.best_value:.12g} after {trace.iterations} "
          f"iterations; log written to {args.out}")
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hcmin",
        description="Minimize the harmonic centrality of one vertex by "
                    "deleting a few of its incoming edges.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run one algorithm on one target")
    solve.add_argument("--graph", required=True)
    solve.add_argument("--target", type=int, required=True,
                       help="vertex id as it appears in the file")
    group = solve.add_mutually_exclusive_group(required=True)
    group.add_argument("--budget", type=int)
    group.add_argument("--budget-frac", type=float)
    solve.add_argument("--algo", choices=ALGORITHMS, required=True)
    solve.add_argument("--alpha", type=float, default=0.5)
    solve.add_argument("--iters", type=int, default=1000)
    solve.add_argument("--seed", type=int, default=0)
    solve.set_defaults(func=_cmd_solve)

    bench = sub.add_parser("bench", help="run the experiment grid to CSV")
    bench.add_argument("--graph", required=True)
    bench.add_argument("--name", default=None,
                       help="graph label in the CSV (default: file name)")
    bench.add_argument("--targets", default="auto",
                       help="'auto' or comma-separated original ids")
    bench.add_argument("--budget-fracs", default="0.25,0.5,0.75")
    bench.add_argument("--algos", default="empty,random,degree,topb")
    bench.add_argument("--out", required=True)
    bench.add_argument("--time-limit-secs", type=float, default=3600.0)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--alpha", type=float, default=0.5)
    bench.add_argument("--iters", type=int, default=1000)
    bench.add_argument("--min-indegree", type=int, default=100)
    bench.add_argument("--target-count", type=int, default=20)
    bench.set_defaults(func=_cmd_bench)

    gadget = sub.add_parser("gadget", help="emit a generated hard instance")
    gadget.add_argument("kind", choices=("kunion", "greedy-adv", "alg1-adv"))
    gadget.add_argument("--k", type=int, required=True)
    gadget.add_argument("--out", default=None)
    gadget.add_argument("--seed", type=int, default=0,
                        help="instance seed (kunion only)")
    gadget.set_defaults(func=_cmd_gadget)

    oracle = sub.add_parser("oracle", help="brute-force optimum for one target")
    oracle.add_argument("--graph", required=True)
    oracle.add_argument("--target", type=int, required=True)
    oracle.add_argument("--budget", type=int, required=True)
    oracle.add_argument("--work-cap", type=float, default=1e8)
    oracle.set_defaults(func=_cmd_oracle)

    trace = sub.add_parser("trace", help="log the relaxation solver to CSV")
    trace.add_argument("--graph", required=True)
    trace.add_argument("--target", type=int, required=True)
    trace.add_argument("--budget", type=int, required=True)
    trace.add_argument("--iters", type=int, default=1000)
    trace.add_argument("--out", required=True)
    trace.set_defaults(func=_cmd_trace)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench" and args.name is None:
        args.name = args.graph.rsplit("/", 1)[-1]
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
