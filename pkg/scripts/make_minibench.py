"""Regenerate the bundled mini-benchmark graphs under data/minibench/.

Two small synthetic directed graphs, fixed seeds, written as plain edge
lists. web_core is a sparse uniform random digraph; hub_mix grows by
preferential attachment so a handful of early vertices collect most
in-edges. Both have enough mid-degree vertices for three budget fractions
to stay positive.
"""
import pathlib

import numpy as np

from hcmin import DiGraph, to_edge_list_text


def web_core():
    rng = np.random.Generator(np.random.Philox(71001))
    n = 70
    mask = rng.random((n, n)) < 0.09
    np.fill_diagonal(mask, False)
    return DiGraph(n, np.argwhere(mask))


def hub_mix():
    rng = np.random.Generator(np.random.Philox(71002))
    n, c = 90, 3
    edges = [(u, w) for u in range(1, c + 1) for w in range(u)]
    pool = [w for _, w in edges]
    for u in range(c + 1, n):
        targets = set()
        for _ in range(c):
            if rng.random() < 0.7 and pool:
                targets.add(pool[int(rng.integers(0, len(pool)))])
            else:
                targets.add(int(rng.integers(0, u)))
        for w in targets:
            edges.append((u, w))
            pool.append(w)
    return DiGraph(n, np.array(edges))


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "minibench"
    out.mkdir(parents=True, exist_ok=True)
    for name, graph in [("web_core", web_core()), ("hub_mix", hub_mix())]:
        path = out / f"{name}.txt"
        header = f"% {name}: synthetic mini-benchmark graph\n"
        path.write_text(header + to_edge_list_text(graph))
        degs = graph.in_degrees()
        print(f"{name}: n={graph.n} m={graph.edge_count} "
              f"max_indeg={int(degs.max())} "
              f"indeg>=5: {int((degs >= 5).sum())}")


if __name__ == "__main__":
    main()
