"""Prim-style minimum spanning trees on symmetric complete graphs.

The three variants mirror the shortest-path ones: a scan plus relaxation
(:func:`prim_classic`), a pair search with no bookkeeping
(:func:`prim_no_update`), and pair searches over a flush set ``T`` with
relaxation every ``k`` settlements (:func:`prim_periodic`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from qgraph import _backend
from qgraph.graph import CompleteGraph
from qgraph.minsearch import QueryLedger, find_min, find_min_columns, parse_mode
from qgraph.paths import CLASSIC_PHASES, NO_UPDATE_PHASES, PERIODIC_PHASES, resolve_k

__all__ = ["TreeResult", "prim_classic", "prim_no_update", "prim_periodic", "tree_weight"]


def tree_weight(W: np.ndarray, edges) -> float:
    """Correctly rounded sum of the edge weights (independent of edge order)."""
    return math.fsum(float(W[u, v]) for u, v in edges)


@dataclass
class TreeResult:
    """Spanning tree ``edges`` (each ``(u, v)`` with ``u < v``) and its weight.

    ``L``/``M`` hold, for each vertex, the cheapest known connection and its
    endpoint when the run ended (None for the no-update variant).
    ``settle_key[i]`` is the edge weight paid to settle ``order[i]``, and
    ``via_l[i]`` is True when that vertex was taken from the ``L`` scan.
    """

    edges: list
    total_weight: float
    order: np.ndarray
    settle_key: np.ndarray
    via_l: np.ndarray
    L: Optional[np.ndarray] = None
    M: Optional[np.ndarray] = None

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)


def _prepare(g, v0, mode, ledger):
    if not isinstance(g, CompleteGraph):
        raise TypeError(f"expected a CompleteGraph, got {type(g).__name__}")
    if not g.is_complete:
        raise ValueError("graph has infinite weights; spanning trees need a complete graph")
    if not g.is_symmetric:
        raise ValueError("spanning trees need symmetric weights")
    if not 0 <= v0 < g.n:
        raise IndexError(f"start vertex {v0} out of range for n={g.n}")
    return parse_mode(mode), QueryLedger() if ledger is None else ledger


def _edge(a, b):
    a, b = int(a), int(b)
    return (a, b) if a < b else (b, a)


def _finish(g, order, parent, settle_key, via_l, L=None, M=None, counts=None, layout=None, ledger=None):
    if counts is not None:
        for (kind, phase), c in zip(layout, counts):
            if c:
                ledger.charge(int(c), kind=kind, phase=phase)
    edges = [_edge(v, parent[v]) for v in order[1:]]
    return TreeResult(
        edges=edges,
        total_weight=tree_weight(g.weights, edges),
        order=np.asarray(order, dtype=np.int64),
        settle_key=np.asarray(settle_key, dtype=np.float64),
        via_l=np.asarray(via_l, dtype=bool),
        L=L,
        M=M,
    )


def prim_classic(g: CompleteGraph, v0: int = 0, mode="classical", ledger=None) -> TreeResult:
    """Prim's algorithm: pick the cheapest outside vertex, then relax its edges."""
    mode, ledger = _prepare(g, v0, mode, ledger)
    core = _backend.core_for(mode)
    if core is not None:
        order, parent, key, via, L, M, counts = core.prim_classic(g.weights, v0, mode.code)
        return _finish(g, order, parent, key, via, L, M, counts, CLASSIC_PHASES, ledger)

    W = g.weights
    n = g.n
    L = W[v0].copy()
    L[v0] = 0.0
    M = np.full(n, v0, dtype=np.int64)
    M[v0] = -1
    ledger.charge(n - 1, kind="setup", phase="init")
    out = np.ones(n, dtype=bool)
    out[v0] = False
    order, key = [v0], [0.0]
    parent = np.full(n, -1, dtype=np.int64)
    for _ in range(n - 1):
        idx = np.flatnonzero(out)
        j, lw = find_min(L[idx], mode, ledger, phase="select")
        w = idx[j]
        out[w] = False
        order.append(w)
        key.append(lw)
        parent[w] = M[w]
        rest = np.delete(idx, j)
        if rest.size:
            ledger.charge(rest.size, kind="update", phase="relax")
            cand = W[w, rest]
            better = cand < L[rest]
            L[rest[better]] = cand[better]
            M[rest[better]] = w
    return _finish(g, order, parent, key, [True] * n, L, M)


def prim_no_update(g: CompleteGraph, v0: int = 0, mode="classical", ledger=None) -> TreeResult:
    """Prim without bookkeeping: search every settled x unsettled edge each step."""
    mode, ledger = _prepare(g, v0, mode, ledger)
    core = _backend.core_for(mode)
    if core is not None:
        order, parent, key, via, counts = core.prim_no_update(g.weights, v0, mode.code)
        return _finish(g, order, parent, key, via, counts=counts, layout=NO_UPDATE_PHASES, ledger=ledger)

    W = g.weights
    n = g.n
    inside = np.zeros(n, dtype=bool)
    inside[v0] = True
    parent = np.full(n, -1, dtype=np.int64)
    order, key = [v0], [0.0]
    for _ in range(n - 1):
        s = np.flatnonzero(inside)
        r = np.flatnonzero(~inside)
        p, kv = find_min(W[np.ix_(s, r)], mode, ledger, phase="select")
        a, b = divmod(p, r.size)
        v = r[b]
        parent[v] = s[a]
        inside[v] = True
        order.append(v)
        key.append(kv)
    return _finish(g, order, parent, key, [False] * n)


def prim_periodic(
    g: CompleteGraph, v0: int = 0, k="auto", mode="classical", ledger=None
) -> TreeResult:
    """Prim with relaxation against the flush set ``T`` every ``k`` settlements.

    On a tie between the stale ``L`` scan and the ``T`` pair search the
    ``L`` candidate is settled.
    """
    mode, ledger = _prepare(g, v0, mode, ledger)
    k = resolve_k(k, g.n)
    core = _backend.core_for(mode)
    if core is not None:
        order, parent, key, via, L, M, counts = core.prim_periodic(g.weights, v0, k, mode.code)
        return _finish(g, order, parent, key, via, L, M, counts, PERIODIC_PHASES, ledger)

    W = g.weights
    n = g.n
    L = W[v0].copy()
    L[v0] = 0.0
    M = np.full(n, v0, dtype=np.int64)
    M[v0] = -1
    ledger.charge(n - 1, kind="setup", phase="init")
    out = np.ones(n, dtype=bool)
    out[v0] = False
    parent = np.full(n, -1, dtype=np.int64)
    T = [v0]
    order, key, via = [v0], [0.0], [True]
    while len(order) < n:
        r = np.flatnonzero(out)
        t = np.array(T)
        p, pair_key = find_min(W[np.ix_(t, r)], mode, ledger, phase="pair-search")
        a, b = divmod(p, r.size)
        j, lw = find_min(L[r], mode, ledger, phase="settle-scan")
        if lw <= pair_key:
            new = r[j]
            parent[new] = M[new]
            key.append(lw)
            via.append(True)
        else:
            new = r[b]
            parent[new] = t[a]
            key.append(pair_key)
            via.append(False)
        out[new] = False
        T.append(new)
        order.append(new)
        if len(T) >= k:
            r = np.flatnonzero(out)
            if r.size:
                t = np.array(T)
                rows, vals = find_min_columns(
                    W[np.ix_(t, r)], mode, ledger, kind="update", phase="flush"
                )
                better = vals < L[r]
                L[r[better]] = vals[better]
                M[r[better]] = t[rows[better]]
            T = [v0]
    return _finish(g, order, parent, key, via, L, M)
