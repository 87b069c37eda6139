"""Slow ground-truth implementations for tests and ``qgraph verify``.

Nothing here touches the finder modes or the query ledger.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from qgraph.graph import BipartiteGraph, CompleteGraph
from qgraph.mst import TreeResult, tree_weight
from qgraph.paths import PathTable

__all__ = [
    "brute_force_paths",
    "exhaustive_mst_weight",
    "floyd_warshall",
    "kruskal_mst",
    "prufer_trees",
]


def _table(g) -> np.ndarray:
    if isinstance(g, BipartiteGraph):
        return g.to_digraph()
    if isinstance(g, CompleteGraph):
        return np.array(g.weights)
    d = np.array(g, dtype=np.float64)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("expected a square weight table")
    np.fill_diagonal(d, 0.0)
    return d


def floyd_warshall(g) -> np.ndarray:
    """All-pairs shortest distances, O(n^3).

    Bipartite graphs are treated as digraphs on ``n1 + n2`` vertices with V1
    first.
    """
    d = _table(g)
    if (d < 0).any():
        raise ValueError("negative weights are not supported")
    n = d.shape[0]
    for m in range(n):
        d = np.minimum(d, d[:, m, None] + d[None, m, :])
    return d


def brute_force_paths(g: CompleteGraph, v0: int = 0, max_n: int = 8) -> PathTable:
    """Shortest distances by enumerating every simple path out of ``v0``."""
    n = g.n
    if n > max_n:
        raise ValueError(f"brute force is limited to n <= {max_n}, got {n}")
    W = g.weights
    best = [math.inf] * n
    pred = [-1] * n
    best[v0] = 0.0

    def walk(v, dist, visited):
        for u in range(n):
            if u in visited:
                continue
            d = dist + W[v, u]
            if d < best[u]:
                best[u] = d
                pred[u] = v
            visited.add(u)
            walk(u, d, visited)
            visited.discard(u)

    walk(v0, 0.0, {v0})
    return PathTable(v0, np.array(best), np.array(pred, dtype=np.int64), np.empty(0, dtype=np.int64))


def kruskal_mst(g: CompleteGraph) -> TreeResult:
    """Minimum spanning tree by Kruskal with union-find."""
    W = g.weights
    if not np.array_equal(W, W.T):
        raise ValueError("Kruskal oracle needs symmetric weights")
    n = g.n
    parent = list(range(n))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = sorted(((W[u, v], u, v) for u in range(n) for v in range(u + 1, n)))
    tree = []
    for w, u, v in edges:
        ru, rv = root(u), root(v)
        if ru != rv:
            parent[ru] = rv
            tree.append((u, v))
            if len(tree) == n - 1:
                break
    empty = np.empty(0)
    return TreeResult(tree, tree_weight(W, tree), np.empty(0, dtype=np.int64), empty, empty.astype(bool))


def prufer_trees(n: int):
    """Every labelled tree on ``n`` vertices, as edge lists (Cayley: n**(n-2))."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = degree.index(1)
            edges.append((min(leaf, x), max(leaf, x)))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [i for i in range(n) if degree[i] == 1]
        edges.append((u, v))
        yield edges


def exhaustive_mst_weight(g: CompleteGraph, max_n: int = 7) -> float:
    """Minimum spanning-tree weight over all labelled trees."""
    if g.n > max_n:
        raise ValueError(f"exhaustive enumeration is limited to n <= {max_n}, got {g.n}")
    return min(tree_weight(g.weights, t) for t in prufer_trees(g.n))
