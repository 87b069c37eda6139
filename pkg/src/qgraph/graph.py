"""Dense weighted complete / complete-bipartite digraphs and seeded generators.

Weights are nonnegative doubles, with ``math.inf`` standing in for an absent
edge. Graphs are immutable once built: the weight tables are read-only numpy
arrays, so a graph can be shared freely between concurrent runs.

Random weights come from SplitMix64 in counter mode (output ``i`` of seed
``s`` is ``mix(s + (i + 1) * 0x9E3779B97F4A7C15)``), which is trivial to
reproduce bit-for-bit in any language. The default distribution is uniform on
the dyadic grid ``{j / 2**40 : 1 <= j <= 2**40}`` inside ``(0, 1]``; every
path sum over fewer than 8192 edges is then exact in double precision, so
distances from different algorithms can be compared with ``==``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "BipartiteGraph",
    "CompleteGraph",
    "GraphFormatError",
    "GraphGenSpec",
    "format_graph",
    "generate",
    "load_graph",
    "save_graph",
    "splitmix64",
    "weight",
]

GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
GRID_BITS = 40


class GraphFormatError(ValueError):
    """Raised for malformed graph files."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


def _check_weights(a: np.ndarray, what: str) -> None:
    if np.isnan(a).any():
        raise ValueError(f"{what}: NaN weight")
    if (a < 0).any():
        raise ValueError(f"{what}: negative weight")


@dataclass(frozen=True, eq=False)
class CompleteGraph:
    """Directed graph on vertices ``0..n-1`` with a dense ``n x n`` weight table.

    The diagonal is stored as 0 and never read by the algorithms.
    """

    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=np.float64)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
            raise ValueError(f"weight table must be square and non-empty, got {w.shape}")
        np.fill_diagonal(w, 0.0)
        _check_weights(w, "complete graph")
        object.__setattr__(self, "weights", _frozen(w))

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def is_complete(self) -> bool:
        return bool(np.isfinite(self.weights).all())

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.weights, self.weights.T))

    def __eq__(self, other):
        if not isinstance(other, CompleteGraph):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)

    def __repr__(self):
        return f"CompleteGraph(n={self.n})"


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """Complete bipartite digraph.

    ``w12[i, j]`` is the weight of ``V1[i] -> V2[j]`` and ``w21[j, i]`` the
    weight of ``V2[j] -> V1[i]``. Both tables are stored densely.
    """

    w12: np.ndarray
    w21: np.ndarray

    def __post_init__(self):
        a = np.array(self.w12, dtype=np.float64)
        b = np.array(self.w21, dtype=np.float64)
        if a.ndim != 2 or min(a.shape) < 1:
            raise ValueError(f"w12 must be a non-empty matrix, got {a.shape}")
        if b.shape != a.shape[::-1]:
            raise ValueError(f"w21 shape {b.shape} does not match w12 shape {a.shape}")
        _check_weights(a, "w12")
        _check_weights(b, "w21")
        object.__setattr__(self, "w12", _frozen(a))
        object.__setattr__(self, "w21", _frozen(b))

    @property
    def n1(self) -> int:
        return self.w12.shape[0]

    @property
    def n2(self) -> int:
        return self.w12.shape[1]

    @property
    def is_complete(self) -> bool:
        return bool(np.isfinite(self.w12).all() and np.isfinite(self.w21).all())

    def to_digraph(self) -> np.ndarray:
        """Dense ``(n1+n2)``-square table, V1 first, ``inf`` inside each part."""
        n1, n2 = self.n1, self.n2
        d = np.full((n1 + n2, n1 + n2), np.inf)
        np.fill_diagonal(d, 0.0)
        d[:n1, n1:] = self.w12
        d[n1:, :n1] = self.w21
        return d

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return np.array_equal(self.w12, other.w12) and np.array_equal(self.w21, other.w21)

    def __repr__(self):
        return f"BipartiteGraph(n1={self.n1}, n2={self.n2})"


Graph = Union[CompleteGraph, BipartiteGraph]


def splitmix64(seed: int, count: int) -> np.ndarray:
    """First ``count`` outputs of SplitMix64 seeded with ``seed`` (uint64)."""
    with np.errstate(over="ignore"):
        z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + GOLDEN_GAMMA * np.arange(
            1, count + 1, dtype=np.uint64
        )
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))


def _unit_interval(seed: int, count: int) -> np.ndarray:
    bits = splitmix64(seed, count) >> np.uint64(64 - GRID_BITS)
    return (bits.astype(np.float64) + 1.0) * 2.0**-GRID_BITS


@dataclass(frozen=True)
class GraphGenSpec:
    """Recipe for a random graph; ``generate`` is a pure function of it.

    ``low``/``high`` bound the half-open interval ``(low, high]``. With
    ``symmetric`` set, complete graphs get ``w(u, v) == w(v, u)``.
    """

    shape: str = "complete"
    n: int = 0
    n1: int = 0
    n2: int = 0
    seed: int = 0
    low: float = 0.0
    high: float = 1.0
    symmetric: bool = False

    def __post_init__(self):
        if self.shape not in ("complete", "bipartite"):
            raise ValueError(f"unknown graph shape {self.shape!r}")
        if self.shape == "complete" and self.n < 1:
            raise ValueError(f"complete graph needs n >= 1, got {self.n}")
        if self.shape == "bipartite" and (self.n1 < 1 or self.n2 < 1):
            raise ValueError(f"bipartite graph needs n1, n2 >= 1, got {self.n1}, {self.n2}")
        if not (0.0 <= self.low < self.high) or math.isinf(self.high):
            raise ValueError(f"bad weight interval ({self.low}, {self.high}]")


def generate(spec: GraphGenSpec) -> Graph:
    """Build the graph described by ``spec``.

    >>> generate(GraphGenSpec(n=1, seed=7)).n
    1
    """

    def scale(u):
        if spec.low == 0.0 and spec.high == 1.0:
            return u
        return spec.low + (spec.high - spec.low) * u

    if spec.shape == "complete":
        n = spec.n
        u = scale(_unit_interval(spec.seed, n * n)).reshape(n, n)
        if spec.symmetric:
            upper = np.triu(u, 1)
            u = upper + upper.T
        return CompleteGraph(u)
    n1, n2 = spec.n1, spec.n2
    u = scale(_unit_interval(spec.seed, 2 * n1 * n2))
    return BipartiteGraph(u[: n1 * n2].reshape(n1, n2), u[n1 * n2 :].reshape(n2, n1))


def weight(g: CompleteGraph, u: int, v: int, ledger, phase: str = "search") -> float:
    """Read ``w(u, v)`` through the query ledger.

    ``phase`` is the ledger kind charged: ``"search"``, ``"update"`` or
    ``"setup"``.
    """
    n = g.n
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"vertex pair ({u}, {v}) out of range for n={n}")
    if u == v:
        raise ValueError(f"self-loop ({u}, {u}) is not an edge")
    ledger.charge(1, kind=phase, phase="oracle")
    return float(g.weights[u, v])


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else repr(float(x))


def format_graph(g: Graph) -> str:
    """Render ``g`` in the ``u v w`` edge-list text format.

    Bipartite files number V1 as ``0..n1-1`` and V2 as ``n1..n1+n2-1``.
    """
    lines = []
    if isinstance(g, CompleteGraph):
        lines.append(f"complete {g.n}")
        w = g.weights
        for u in range(g.n):
            for v in range(g.n):
                if u != v:
                    lines.append(f"{u} {v} {_fmt(w[u, v])}")
    else:
        n1, n2 = g.n1, g.n2
        lines.append(f"bipartite {n1} {n2}")
        for i in range(n1):
            for j in range(n2):
                lines.append(f"{i} {n1 + j} {_fmt(g.w12[i, j])}")
        for j in range(n2):
            for i in range(n1):
                lines.append(f"{n1 + j} {i} {_fmt(g.w21[j, i])}")
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w") as f:
        f.write(format_graph(g))


def _parse_weight(tok: str, lineno: int) -> float:
    try:
        x = math.inf if tok.lower() == "inf" else float(tok)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad weight {tok!r}") from None
    if math.isnan(x) or x < 0:
        raise GraphFormatError(f"line {lineno}: weight must be >= 0, got {tok}")
    return x


def load_graph(path: str | os.PathLike) -> Graph:
    """Read a graph written by :func:`save_graph` (or by hand).

    Pairs that are not listed default to ``inf``. Vertices outside the
    declared size, duplicate pairs, self-loops and intra-part edges of a
    bipartite graph are rejected.
    """
    with open(path) as f:
        rows = [(i + 1, ln.split()) for i, ln in enumerate(f) if ln.strip() and not ln.startswith("#")]
    if not rows:
        raise GraphFormatError("empty graph file")
    lineno, head = rows[0]
    try:
        if head[0] == "complete" and len(head) == 2:
            sizes = (int(head[1]),)
        elif head[0] == "bipartite" and len(head) == 3:
            sizes = (int(head[1]), int(head[2]))
        else:
            raise ValueError
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad header {' '.join(head)!r}") from None
    if min(sizes) < 1:
        raise GraphFormatError(f"line {lineno}: sizes must be >= 1")

    total = sum(sizes)
    d = np.full((total, total), np.inf)
    seen = set()
    for lineno, toks in rows[1:]:
        if len(toks) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'u v w', got {' '.join(toks)!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex ids") from None
        if not (0 <= u < total and 0 <= v < total):
            raise GraphFormatError(
                f"line {lineno}: vertex out of range for declared size {total}"
            )
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop")
        if len(sizes) == 2 and (u < sizes[0]) == (v < sizes[0]):
            raise GraphFormatError(f"line {lineno}: edge inside one part of a bipartite graph")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate pair ({u}, {v})")
        seen.add((u, v))
        d[u, v] = _parse_weight(toks[2], lineno)

    if len(sizes) == 1:
        return CompleteGraph(d)
    n1 = sizes[0]
    return BipartiteGraph(d[:n1, n1:], d[n1:, :n1])
