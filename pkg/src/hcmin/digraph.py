"""Directed graphs: edge-list parsing, CSR adjacency, and in-edge removal views.

Graphs are simple (no self-loops, no duplicate edges) and immutable once
built. Vertex ids are dense integers in ``[0, n)``; parsed graphs also keep
the ids used in the source file.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ParseError(ValueError):
    """Malformed edge-list input."""


@dataclass(frozen=True)
class ParseStats:
    """Counts collected while parsing an edge list."""

    data_lines: int
    comment_lines: int
    duplicate_edges: int
    self_loops: int


def _build_indptr(sorted_heads, n):
    indptr = np.zeros(n + 1, dtype=np.int64)
    if sorted_heads.size:
        np.cumsum(np.bincount(sorted_heads, minlength=n), out=indptr[1:])
    return indptr


class DiGraph:
    """Immutable simple digraph with forward and reverse CSR adjacency.

    ``original_ids`` maps dense ids back to source ids; graphs built in code
    use the identity mapping. All backing arrays are read-only, so instances
    can be shared freely between threads.
    """

    def __init__(self, n, edges, original_ids=None, parse_stats=None):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size:
            if edges.min() < 0 or edges.max() >= n:
                raise ValueError("edge endpoint outside [0, n)")
            edges = edges[edges[:, 0] != edges[:, 1]]
            edges = np.unique(edges, axis=0)
        self.n = n
        self._edges = edges
        tails = edges[:, 0]
        heads = edges[:, 1]
        self._out_indptr = _build_indptr(tails, n)
        self._out_indices = heads.astype(np.int32)
        by_head = np.lexsort((tails, heads))
        self._in_indptr = _build_indptr(heads[by_head], n)
        self._in_indices = tails[by_head].astype(np.int32)
        if original_ids is not None:
            original_ids = np.array(original_ids, dtype=np.int64)
            if original_ids.shape != (n,):
                raise ValueError("original_ids must have one entry per vertex")
        self._original_ids = original_ids
        self._dense_by_original = None
        self.parse_stats = parse_stats
        for arr in (self._edges, self._out_indptr, self._out_indices,
                    self._in_indptr, self._in_indices):
            arr.setflags(write=False)
        if original_ids is not None:
            original_ids.setflags(write=False)

    @property
    def edge_count(self):
        return int(self._edges.shape[0])

    def edges(self):
        """All edges as an (m, 2) array of dense ids, sorted by (tail, head)."""
        return self._edges

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside [0, {self.n})")

    def out_neighbors(self, v):
        self._check_vertex(v)
        return self._out_indices[self._out_indptr[v]:self._out_indptr[v + 1]]

    def in_neighbors(self, v):
        """Predecessors of v in ascending id order (read-only array)."""
        self._check_vertex(v)
        return self._in_indices[self._in_indptr[v]:self._in_indptr[v + 1]]

    def in_degree(self, v):
        self._check_vertex(v)
        return int(self._in_indptr[v + 1] - self._in_indptr[v])

    def in_degrees(self):
        return np.diff(self._in_indptr)

    def original_id(self, v):
        self._check_vertex(v)
        if self._original_ids is None:
            return int(v)
        return int(self._original_ids[v])

    def dense_id(self, original):
        """Dense id for a source-file id (KeyError if the id is unknown)."""
        if self._original_ids is None:
            if 0 <= original < self.n:
                return int(original)
            raise KeyError(original)
        if self._dense_by_original is None:
            self._dense_by_original = {
                int(orig): i for i, orig in enumerate(self._original_ids)
            }
        return self._dense_by_original[int(original)]

    def _edges_original(self):
        if self._original_ids is None:
            return self._edges
        mapped = self._original_ids[self._edges]
        return mapped[np.lexsort((mapped[:, 1], mapped[:, 0]))]

    def __eq__(self, other):
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(
            self._edges_original(), other._edges_original())

    __hash__ = None

    def __repr__(self):
        return f"DiGraph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of the target's incoming edges, stored as predecessor ids."""

    target: int
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members",
                           frozenset(int(w) for w in self.members))

    @classmethod
    def of(cls, graph, target, members):
        """Build a validated subset; every member must be a predecessor."""
        subset = cls(target, frozenset(members))
        preds = set(int(w) for w in graph.in_neighbors(target))
        stray = subset.members - preds
        if stray:
            raise ValueError(
                f"not incoming edges of {target}: {sorted(stray)}")
        return subset

    def edges(self):
        return [(w, self.target) for w in sorted(self.members)]

    def __len__(self):
        return len(self.members)


class GraphView:
    """Logical view of a graph with some of the target's in-edges removed.

    Nothing is copied: traversals consult ``kept`` (the surviving
    predecessors of ``target``) instead of the full predecessor list.
    ``kept is None`` means no removal.
    """

    __slots__ = ("graph", "target", "removed", "kept")

    def __init__(self, graph, removed=None):
        self.graph = graph
        if removed is None or not removed.members:
            self.target = removed.target if removed is not None else -1
            self.removed = removed
            self.kept = None
            return
        preds = graph.in_neighbors(removed.target)
        members = np.fromiter(removed.members, dtype=np.int64,
                              count=len(removed.members))
        if not np.isin(members, preds).all():
            stray = sorted(set(members.tolist()) - set(preds.tolist()))
            raise ValueError(
                f"not incoming edges of {removed.target}: {stray}")
        self.target = removed.target
        self.removed = removed
        self.kept = np.setdiff1d(preds.astype(np.int32),
                                 members.astype(np.int32))

    @classmethod
    def _from_kept(cls, graph, target, kept):
        # Internal fast path: callers guarantee kept is a sorted subset of
        # the target's predecessors.
        view = cls.__new__(cls)
        view.graph = graph
        view.target = target
        view.removed = None
        view.kept = kept
        return view


def restrict(graph, removed):
    """View of ``graph`` with the given incoming edges of the target removed."""
    return GraphView(graph, removed)


def as_view(g):
    if isinstance(g, GraphView):
        return g
    return GraphView(g, None)


def _iter_lines(source):
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        return source.splitlines()
    return source


def parse_edge_list(source):
    """Parse whitespace-separated ``u w`` lines into a simplified digraph.

    Lines starting with ``%`` or ``#`` are comments and blank lines are
    skipped. A data line needs at least two integer tokens; extras (weights,
    timestamps) are ignored. Self-loops and duplicate edges are dropped, with
    counts reported in ``parse_stats``. Vertex ids are remapped to dense
    ``[0, n)`` in order of first appearance on kept edges; ``original_id``
    and ``dense_id`` expose the mapping.
    """
    dense = {}
    pairs = []
    seen = set()
    data_lines = comments = dups = loops = 0
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        if isinstance(raw, bytes):
            raw = raw.decode("utf-8")
        line = raw.strip()
        if not line:
            continue
        if line[0] in "%#":
            comments += 1
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"line {lineno}: expected two integer tokens")
        try:
            u = int(parts[0])
            w = int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer endpoint") from exc
        data_lines += 1
        if u == w:
            loops += 1
            continue
        du = dense.setdefault(u, len(dense))
        dw = dense.setdefault(w, len(dense))
        if (du, dw) in seen:
            dups += 1
            continue
        seen.add((du, dw))
        pairs.append((du, dw))
    if not pairs:
        raise ParseError("no edges found in input")
    original = np.empty(len(dense), dtype=np.int64)
    for orig, idx in dense.items():
        original[idx] = orig
    graph = DiGraph(len(dense), np.array(pairs, dtype=np.int64),
                    original_ids=original,
                    parse_stats=ParseStats(data_lines, comments, dups, loops))
    graph._dense_by_original = {int(k): v for k, v in dense.items()}
    return graph


def load_edge_list(path):
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read())


def to_edge_list_text(graph, use_original_ids=True):
    """Serialize as one ``u w`` line per edge, sorted by the emitted pair.

    Original ids are used when the graph carries a mapping, so parsing the
    result reproduces the same graph under that mapping.
    """
    edges = graph.edges()
    if use_original_ids and graph._original_ids is not None:
        mapped = graph._original_ids[edges]
        mapped = mapped[np.lexsort((mapped[:, 1], mapped[:, 0]))]
    else:
        mapped = edges
    return "".join(f"{u} {w}\n" for u, w in mapped)
