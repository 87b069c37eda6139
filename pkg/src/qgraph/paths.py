"""Single-source shortest paths on complete and complete-bipartite digraphs.

Four Dijkstra variants, each generic over the finder mode:

* :func:`dijkstra_classic` scans for the nearest vertex, then relaxes.
* :func:`dijkstra_no_update` skips relaxation and searches all
  settled x unsettled pairs instead.
* :func:`dijkstra_periodic` searches pairs from a small set ``T`` of
  recently settled vertices and relaxes against ``T`` every ``k`` steps.
* :func:`bipartite_partial` settles only the smaller part V1, treating V2 as
  way-points, then fills in V2 at the end.

Candidate order is fixed so every mode and backend breaks ties the same way:
vertex sets are scanned in ascending id, except ``T`` which is scanned in
insertion order, and pair candidates are row-major (source outer).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from qgraph import _backend
from qgraph.graph import BipartiteGraph, CompleteGraph
from qgraph.minsearch import QueryLedger, ceil_sqrt, find_min, find_min_columns, parse_mode

__all__ = [
    "BipartitePathTable",
    "PathTable",
    "bipartite_partial",
    "dijkstra_classic",
    "dijkstra_no_update",
    "dijkstra_periodic",
    "reconstruct_path",
    "resolve_k",
]

# kernel counter layout, shared with _core.pyx
CLASSIC_PHASES = (("setup", "init"), ("search", "select"), ("update", "relax"))
NO_UPDATE_PHASES = (("search", "select"),)
PERIODIC_PHASES = (
    ("setup", "init"),
    ("search", "pair-search"),
    ("search", "settle-scan"),
    ("update", "flush"),
)
BIPARTITE_PHASES = (
    ("search", "init"),
    ("search", "select"),
    ("update", "relax"),
    ("search", "fill"),
)


@dataclass
class PathTable:
    """Distances ``lam`` and predecessors ``pred`` (-1 for none) from ``source``.

    ``order`` lists vertices in the order they were settled.
    """

    source: int
    lam: np.ndarray
    pred: np.ndarray
    order: np.ndarray

    def __len__(self):
        return self.lam.size


@dataclass
class BipartitePathTable:
    """Distances from ``source`` in V1 to every vertex of both parts.

    ``pred1[v] = (u, j)`` means the best path to ``v`` in V1 ends
    ``u -> V2[j] -> v``; ``pred2[j] = u`` means it ends ``u -> V2[j]``.
    ``state_size`` counts the entries held by the main loop (lam1, pred1 and
    the settled flags); it grows with ``n1`` only.
    """

    source: int
    lam1: np.ndarray
    lam2: np.ndarray
    pred1: np.ndarray
    pred2: np.ndarray
    order: np.ndarray
    state_size: int = field(default=0)


def resolve_k(k, n: int) -> int:
    """``"auto"`` (or None) becomes ``ceil(sqrt(n))``; integers must be >= 1."""
    if k is None or k == "auto":
        return max(1, ceil_sqrt(n))
    k = int(k)
    if k < 1:
        raise ValueError(f"flush period k must be >= 1, got {k}")
    return k


def _prepare(g, v0, mode, ledger):
    if not isinstance(g, CompleteGraph):
        raise TypeError(f"expected a CompleteGraph, got {type(g).__name__}")
    if not g.is_complete:
        raise ValueError("graph has infinite weights; these algorithms need a complete graph")
    if not 0 <= v0 < g.n:
        raise IndexError(f"source {v0} out of range for n={g.n}")
    mode = parse_mode(mode)
    return mode, QueryLedger() if ledger is None else ledger


def _charge_counts(ledger, layout, counts):
    for (kind, phase), c in zip(layout, counts):
        if c:
            ledger.charge(int(c), kind=kind, phase=phase)


def dijkstra_classic(g: CompleteGraph, v0: int = 0, mode="classical", ledger=None) -> PathTable:
    """Dijkstra with a full relaxation pass after each settled vertex."""
    mode, ledger = _prepare(g, v0, mode, ledger)
    core = _backend.core_for(mode)
    if core is not None:
        lam, pred, order, counts = core.dijkstra_classic(g.weights, v0, mode.code)
        _charge_counts(ledger, CLASSIC_PHASES, counts)
        return PathTable(v0, lam, pred, order)

    W = g.weights
    n = g.n
    lam = W[v0].copy()
    lam[v0] = 0.0
    pred = np.full(n, v0, dtype=np.int64)
    pred[v0] = -1
    ledger.charge(n - 1, kind="setup", phase="init")
    out = np.ones(n, dtype=bool)
    out[v0] = False
    order = [v0]
    for _ in range(n - 1):
        idx = np.flatnonzero(out)
        j, _ = find_min(lam[idx], mode, ledger, phase="select")
        w = idx[j]
        out[w] = False
        order.append(w)
        rest = np.delete(idx, j)
        if rest.size:
            ledger.charge(rest.size, kind="update", phase="relax")
            cand = lam[w] + W[w, rest]
            better = cand < lam[rest]
            lam[rest[better]] = cand[better]
            pred[rest[better]] = w
    return PathTable(v0, lam, pred, np.array(order, dtype=np.int64))


def dijkstra_no_update(g: CompleteGraph, v0: int = 0, mode="classical", ledger=None) -> PathTable:
    """Dijkstra without relaxation: each step searches all settled x unsettled pairs."""
    mode, ledger = _prepare(g, v0, mode, ledger)
    core = _backend.core_for(mode)
    if core is not None:
        lam, pred, order, counts = core.dijkstra_no_update(g.weights, v0, mode.code)
        _charge_counts(ledger, NO_UPDATE_PHASES, counts)
        return PathTable(v0, lam, pred, order)

    W = g.weights
    n = g.n
    lam = np.full(n, np.inf)
    lam[v0] = 0.0
    pred = np.full(n, -1, dtype=np.int64)
    inside = np.zeros(n, dtype=bool)
    inside[v0] = True
    order = [v0]
    for _ in range(n - 1):
        s = np.flatnonzero(inside)
        r = np.flatnonzero(~inside)
        keys = lam[s, None] + W[np.ix_(s, r)]
        p, key = find_min(keys, mode, ledger, phase="select")
        a, b = divmod(p, r.size)
        w, v = s[a], r[b]
        lam[v] = key
        pred[v] = w
        inside[v] = True
        order.append(v)
    return PathTable(v0, lam, pred, np.array(order, dtype=np.int64))


def dijkstra_periodic(
    g: CompleteGraph, v0: int = 0, k="auto", mode="classical", ledger=None
) -> PathTable:
    """Dijkstra with relaxation deferred until ``k`` vertices have piled up in ``T``.

    ``k=1`` reproduces :func:`dijkstra_classic`'s distances and ``k=n``
    degenerates to :func:`dijkstra_no_update`'s search pattern. Distances of
    unsettled vertices may be stale between flushes; the pair search over
    ``T`` covers the gap.
    """
    mode, ledger = _prepare(g, v0, mode, ledger)
    k = resolve_k(k, g.n)
    core = _backend.core_for(mode)
    if core is not None:
        lam, pred, order, counts = core.dijkstra_periodic(g.weights, v0, k, mode.code)
        _charge_counts(ledger, PERIODIC_PHASES, counts)
        return PathTable(v0, lam, pred, order)

    W = g.weights
    n = g.n
    lam = W[v0].copy()
    lam[v0] = 0.0
    pred = np.full(n, v0, dtype=np.int64)
    pred[v0] = -1
    ledger.charge(n - 1, kind="setup", phase="init")
    out = np.ones(n, dtype=bool)
    out[v0] = False
    T = [v0]
    order = [v0]
    while len(order) < n:
        r = np.flatnonzero(out)
        t = np.array(T)
        keys = lam[t, None] + W[np.ix_(t, r)]
        p, pair_key = find_min(keys, mode, ledger, phase="pair-search")
        a, b = divmod(p, r.size)
        j, stale = find_min(lam[r], mode, ledger, phase="settle-scan")
        if pair_key <= stale:
            new = r[b]
            lam[new] = pair_key
            pred[new] = t[a]
        else:
            new = r[j]
        out[new] = False
        T.append(new)
        order.append(new)
        if len(T) >= k:
            r = np.flatnonzero(out)
            if r.size:
                t = np.array(T)
                rows, vals = find_min_columns(
                    lam[t, None] + W[np.ix_(t, r)], mode, ledger, kind="update", phase="flush"
                )
                better = vals < lam[r]
                lam[r[better]] = vals[better]
                pred[r[better]] = t[rows[better]]
            T = [v0]
    return PathTable(v0, lam, pred, np.array(order, dtype=np.int64))


def bipartite_partial(
    g: BipartiteGraph, v0: int = 0, mode="classical", ledger=None
) -> BipartitePathTable:
    """Shortest paths from ``v0`` in V1, keeping per-step state on V1 only.

    V1 distances are settled through two-hop V1 -> V2 -> V1 moves; V2
    distances are filled in afterwards from the finished V1 table.
    """
    if not isinstance(g, BipartiteGraph):
        raise TypeError(f"expected a BipartiteGraph, got {type(g).__name__}")
    if not g.is_complete:
        raise ValueError("bipartite graph has infinite weights")
    if not 0 <= v0 < g.n1:
        raise IndexError(f"source {v0} is not in V1 (n1={g.n1})")
    mode = parse_mode(mode)
    ledger = QueryLedger() if ledger is None else ledger
    n1, n2 = g.n1, g.n2
    core = _backend.core_for(mode)
    if core is not None:
        lam1, lam2, pred1, pred2, order, counts = core.bipartite_partial(
            g.w12, g.w21, v0, mode.code
        )
        _charge_counts(ledger, BIPARTITE_PHASES, counts)
        return BipartitePathTable(v0, lam1, lam2, pred1, pred2, order, 4 * n1)

    A, B = g.w12, g.w21
    lam1 = np.full(n1, np.inf)
    lam1[v0] = 0.0
    pred1 = np.full((n1, 2), -1, dtype=np.int64)
    inside = np.zeros(n1, dtype=bool)
    inside[v0] = True
    others = np.flatnonzero(~inside)
    if others.size:
        rows, vals = find_min_columns(A[v0][:, None] + B[:, others], mode, ledger, phase="init")
        lam1[others] = vals
        pred1[others, 0] = v0
        pred1[others, 1] = rows
    order = [v0]
    while len(order) < n1:
        s = np.flatnonzero(inside)
        r = np.flatnonzero(~inside)
        keys = (lam1[s, None] + A[s])[:, :, None] + B[:, r][None, :, :]
        p, key = find_min(keys, mode, ledger, phase="select")
        a, rem = divmod(p, n2 * r.size)
        via, c = divmod(rem, r.size)
        w = r[c]
        lam1[w] = key
        pred1[w] = (s[a], via)
        inside[w] = True
        order.append(w)
        r = np.flatnonzero(~inside)
        if r.size:
            rows, vals = find_min_columns(
                (lam1[w] + A[w])[:, None] + B[:, r], mode, ledger, kind="update", phase="relax"
            )
            better = vals < lam1[r]
            lam1[r[better]] = vals[better]
            pred1[r[better], 0] = w
            pred1[r[better], 1] = rows[better]
    pred2, lam2 = find_min_columns(lam1[:, None] + A, mode, ledger, phase="fill")
    return BipartitePathTable(
        v0, lam1, lam2, pred1, pred2.astype(np.int64), np.array(order, dtype=np.int64), 4 * n1
    )


def reconstruct_path(t, v):
    """Vertices on the recorded shortest path from ``t.source`` to ``v``.

    For a :class:`BipartitePathTable`, ``v`` and the returned entries are
    ``(part, index)`` pairs with ``part`` 1 or 2.
    """
    if isinstance(t, BipartitePathTable):
        return _bipartite_path(t, v)
    n = t.lam.size
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for n={n}")
    path = [int(v)]
    while path[-1] != t.source:
        p = int(t.pred[path[-1]])
        if p < 0 or len(path) > n:
            raise ValueError(f"no recorded path to {v}")
        path.append(p)
    return path[::-1]


def _bipartite_path(t, v):
    part, idx = v
    n1, n2 = t.lam1.size, t.lam2.size
    if part not in (1, 2) or not 0 <= idx < (n1 if part == 1 else n2):
        raise IndexError(f"vertex {v} out of range for parts ({n1}, {n2})")
    tail = []
    if part == 2:
        tail.append((2, int(idx)))
        idx = int(t.pred2[idx])
    while idx != t.source:
        tail.append((1, int(idx)))
        u, via = t.pred1[idx]
        if u < 0 or len(tail) > 2 * n1:
            raise ValueError(f"no recorded path to {v}")
        tail.append((2, int(via)))
        idx = int(u)
    tail.append((1, int(t.source)))
    return tail[::-1]


def path_weight(g, path) -> float:
    """Sum of edge weights along ``path``, added left to right."""
    total = 0.0
    if isinstance(g, BipartiteGraph):
        for (pa, a), (pb, b) in zip(path, path[1:]):
            if pa == pb:
                raise ValueError("bipartite path must alternate parts")
            total += g.w12[a, b] if pa == 1 else g.w21[a, b]
        return total
    for a, b in zip(path, path[1:]):
        total += g.weights[a, b]
    return total
