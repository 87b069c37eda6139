"""Run, verify and sweep the algorithms; fit scaling exponents.

Every run produces one row with the fixed columns in :data:`COLUMNS`.
Classical and IdealQuantum rows are fully determined by the config, so two
identical sweeps write byte-identical CSV.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import struct
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from qgraph.diameter import diameter_run
from qgraph.graph import BipartiteGraph, CompleteGraph, GraphGenSpec, generate, load_graph
from qgraph.minsearch import MODE_NAMES, QueryLedger, parse_mode
from qgraph.mst import prim_classic, prim_no_update, prim_periodic
from qgraph.oracles import floyd_warshall, kruskal_mst
from qgraph.paths import (
    BipartitePathTable,
    bipartite_partial,
    dijkstra_classic,
    dijkstra_no_update,
    dijkstra_periodic,
    path_weight,
    reconstruct_path,
    resolve_k,
)

COLUMNS = (
    "algorithm", "mode", "n", "n1", "n2", "k", "seed", "trial",
    "search_queries", "update_queries", "total", "checksum",
)

PATH_ALGORITHMS = {
    "dijkstra-classic": dijkstra_classic,
    "dijkstra-no-update": dijkstra_no_update,
    "dijkstra-periodic": dijkstra_periodic,
}
TREE_ALGORITHMS = {
    "prim-classic": prim_classic,
    "prim-no-update": prim_no_update,
    "prim-periodic": prim_periodic,
}
ALGORITHMS = (*PATH_ALGORITHMS, *TREE_ALGORITHMS, "bipartite", "diameter")
PERIODIC = ("dijkstra-periodic", "prim-periodic", "diameter")

# (low, high) slope windows; they absorb finite-size effects of lower-order terms
SLOPE_WINDOWS = {
    ("dijkstra-classic", "classical"): (1.9, 2.1),
    ("dijkstra-no-update", "classical"): (2.85, 3.1),
    ("dijkstra-no-update", "ideal-quantum"): (1.85, 2.1),
    ("dijkstra-periodic", "ideal-quantum"): (1.6, 1.9),
    ("prim-periodic", "ideal-quantum"): (1.6, 1.9),
    ("diameter", "ideal-quantum"): (2.05, 2.45),
}

DH_DEFAULT_TRIALS = 32


class ConfigError(ValueError):
    """Invalid algorithm / mode / k combination."""


@dataclass
class RunConfig:
    algorithm: str
    mode: str = "classical"
    n: Optional[int] = None
    n1: Optional[int] = None
    n2: Optional[int] = None
    k: object = None
    v0: int = 0
    seed: int = 0
    trials: int = 1
    graph_file: Optional[str] = None

    def validate(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}")
        if self.mode not in MODE_NAMES:
            raise ConfigError(f"unknown mode {self.mode!r}; expected one of {MODE_NAMES}")
        if self.k is not None and self.algorithm not in PERIODIC:
            raise ConfigError(f"k is only meaningful for {PERIODIC}, not {self.algorithm!r}")
        if self.k not in (None, "auto"):
            try:
                if int(self.k) < 1:
                    raise ValueError
            except (TypeError, ValueError):
                raise ConfigError(f"k must be a positive integer or 'auto', got {self.k!r}") from None
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.graph_file is None:
            if self.algorithm == "bipartite":
                if not (self.n1 and self.n2):
                    raise ConfigError("bipartite runs need --n1 and --n2 (or --graph-file)")
            elif not self.n:
                raise ConfigError(f"{self.algorithm} needs --n (or --graph-file)")
        return self


@dataclass
class ExponentFit:
    slope: float
    intercept: float
    residual: float
    sizes: list = field(default_factory=list)
    totals: list = field(default_factory=list)


def _digest(*parts: bytes) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p)
    return h.hexdigest()[:16]


def _f64(values) -> bytes:
    return np.ascontiguousarray(values, dtype="<f8").tobytes()


def checksum(result, weights_only: bool = False) -> str:
    """Deterministic digest of an algorithm's output.

    Distance tables hash their distances; trees hash edges and weight, or only
    the weight when ``weights_only`` (DHSim may pick a different tree among
    equal-weight ones); a diameter hashes its value.
    """
    if isinstance(result, BipartitePathTable):
        return _digest(_f64(result.lam1), _f64(result.lam2))
    if hasattr(result, "lam"):
        return _digest(_f64(result.lam))
    if hasattr(result, "edges"):
        w = struct.pack("<d", result.total_weight)
        if weights_only:
            return _digest(w)
        return _digest(json.dumps(sorted(result.edges)).encode(), w)
    return _digest(struct.pack("<d", float(result)))


def graph_for(algorithm: str, seed: int, n=None, n1=None, n2=None):
    """The random graph a run of ``algorithm`` uses for this seed and size."""
    if algorithm == "bipartite":
        return generate(GraphGenSpec("bipartite", n1=n1, n2=n2, seed=seed))
    return generate(GraphGenSpec("complete", n=n, seed=seed, symmetric=algorithm in TREE_ALGORITHMS))


def execute(algorithm: str, g, mode, v0: int = 0, k=None, ledger=None):
    """Run one algorithm; returns ``(result, resolved_k)``."""
    mode = parse_mode(mode)
    if algorithm in PATH_ALGORITHMS or algorithm in TREE_ALGORITHMS:
        fn = PATH_ALGORITHMS.get(algorithm) or TREE_ALGORITHMS[algorithm]
        if algorithm.endswith("periodic"):
            k = resolve_k(k, g.n)
            return fn(g, v0, k, mode, ledger), k
        return fn(g, v0, mode, ledger), None
    if algorithm == "bipartite":
        return bipartite_partial(g, v0, mode, ledger), None
    if algorithm == "diameter":
        k = resolve_k(k, g.n)
        return diameter_run(g, "dijkstra-periodic", k, mode, ledger).value, k
    raise ConfigError(f"unknown algorithm {algorithm!r}")


def _row(algorithm, mode_name, g, k, seed, trial, ledger, result):
    bip = isinstance(g, BipartiteGraph)
    return {
        "algorithm": algorithm,
        "mode": mode_name,
        "n": "" if bip else g.n,
        "n1": g.n1 if bip else "",
        "n2": g.n2 if bip else "",
        "k": "" if k is None else k,
        "seed": seed,
        "trial": trial,
        "search_queries": ledger.search_queries,
        "update_queries": ledger.update_queries,
        "total": ledger.total,
        "checksum": checksum(result, weights_only=mode_name == "dh-sim"),
    }


def cmd_run(config: RunConfig, graph=None) -> list[dict]:
    """Execute ``config.trials`` runs and return their rows.

    Trial ``t`` uses graph seed ``seed + t`` (unless a graph is given) and,
    in DHSim mode, finder seed ``seed + t``.
    """
    config.validate()
    if graph is None and config.graph_file:
        graph = load_graph(config.graph_file)
    rows = []
    for t in range(config.trials):
        seed = config.seed + t
        g = graph if graph is not None else graph_for(
            config.algorithm, seed, config.n, config.n1, config.n2
        )
        if config.algorithm == "bipartite" and not isinstance(g, BipartiteGraph):
            raise ConfigError("bipartite algorithm needs a bipartite graph")
        if config.algorithm != "bipartite" and not isinstance(g, CompleteGraph):
            raise ConfigError(f"{config.algorithm} needs a complete graph")
        ledger = QueryLedger()
        result, k = execute(config.algorithm, g, parse_mode(config.mode, seed), config.v0, config.k, ledger)
        rows.append(_row(config.algorithm, config.mode, g, k, seed, t, ledger, result))
    return rows


def rows_to_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def rows_to_json(rows: Iterable[dict]) -> str:
    return json.dumps(list(rows), indent=2) + "\n"


# ---------------------------------------------------------------- fitting


def fit_power_law(sizes, totals) -> ExponentFit:
    """Least-squares line through ``(log size, log total)``."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(totals, dtype=float))
    if np.unique(x).size < 3:
        raise ValueError("need at least 3 distinct sizes to fit an exponent")
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return ExponentFit(
        float(slope), float(intercept), float(np.sqrt(np.mean(resid**2))),
        [float(s) for s in sizes], [float(t) for t in totals],
    )


def _size_of(row) -> int:
    return int(row["n2"]) if row["algorithm"] == "bipartite" else int(row["n"])


def fit_exponent(rows: Iterable[dict]) -> ExponentFit:
    """Fit ``log total`` against ``log n`` (``n2`` for bipartite rows).

    Rows sharing a size are averaged first, which is how DHSim trials are
    combined.
    """
    by_size: dict[int, list] = {}
    for r in rows:
        by_size.setdefault(_size_of(r), []).append(float(r["total"]))
    sizes = sorted(by_size)
    return fit_power_law(sizes, [np.mean(by_size[s]) for s in sizes])


def slope_window(algorithm: str, mode: str):
    return SLOPE_WINDOWS.get((algorithm, mode))


def cmd_scaling(algorithm, mode, sizes, k=None, trials=None, seed=0, n1=None):
    """Run a size grid and fit the exponent.

    For ``bipartite`` the grid is over ``n2`` with ``n1`` fixed. Returns
    ``(rows, fit, verdict)`` where verdict is True/False against the known
    window, or None when no window is defined.
    """
    if trials is None:
        trials = DH_DEFAULT_TRIALS if mode == "dh-sim" else 1
    rows = []
    for size in sizes:
        if algorithm == "bipartite":
            cfg = RunConfig(algorithm, mode, n1=n1, n2=size, seed=seed, trials=trials)
        else:
            cfg = RunConfig(algorithm, mode, n=size, k=k, seed=seed, trials=trials)
        rows.extend(cmd_run(cfg))
    fit = fit_exponent(rows)
    window = slope_window(algorithm, mode)
    verdict = None if window is None else window[0] <= fit.slope <= window[1]
    return rows, fit, verdict


def cmd_ksweep(algorithm, n, mode="ideal-quantum", ks=None, seed=0):
    """Total cost for each flush period ``k`` at fixed ``n``.

    Returns ``(rows, best_k, within_factor_2)`` where the last flag says
    whether the cheapest ``k`` lies within a factor 2 of ``ceil(sqrt(n))``.
    """
    if algorithm not in ("dijkstra-periodic", "prim-periodic"):
        raise ConfigError("ksweep needs a periodic algorithm")
    if ks is None:
        ks = [2**i for i in range(int(math.log2(n)) + 1)]
        if ks[-1] != n:
            ks.append(n)
    g = graph_for(algorithm, seed, n)
    rows = []
    for k in ks:
        ledger = QueryLedger()
        result, _ = execute(algorithm, g, parse_mode(mode, seed), 0, k, ledger)
        rows.append(_row(algorithm, mode, g, k, seed, 0, ledger, result))
    best = min(rows, key=lambda r: (r["total"], r["k"]))
    target = resolve_k("auto", n)
    best_k = best["k"]
    return rows, best_k, target / 2 <= best_k <= 2 * target


# ---------------------------------------------------------------- verify


@dataclass
class VerifyReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _corrupt(g):
    """Copy of ``g`` with one edge made cheaper than any generated weight."""
    if isinstance(g, BipartiteGraph):
        a = np.array(g.w12)
        a[0, -1] = 2.0**-41
        return BipartiteGraph(a, g.w21)
    w = np.array(g.weights)
    if g.n > 1:
        w[0, -1] = 2.0**-41
        if g.is_symmetric:
            w[-1, 0] = 2.0**-41
    return CompleteGraph(w)


def _check_tree(tag, g, tree, oracle_weight, report):
    n = g.n
    edges = tree.edges
    parent = list(range(n))

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    acyclic = True
    for u, v in edges:
        ru, rv = root(u), root(v)
        if ru == rv:
            acyclic = False
        parent[ru] = rv
    if len(edges) != n - 1 or not acyclic:
        report.mismatches.append(f"{tag}: not a spanning tree ({len(edges)} edges)")
    elif tree.total_weight != oracle_weight:
        report.mismatches.append(
            f"{tag}: tree weight {tree.total_weight!r} != oracle {oracle_weight!r}"
        )


def _check_paths(tag, g, table, dist_row, report):
    bad = np.flatnonzero(table.lam != dist_row)
    if bad.size:
        v = int(bad[0])
        report.mismatches.append(
            f"{tag}: distance to vertex {v} is {float(table.lam[v])!r}, oracle says {float(dist_row[v])!r}"
        )
        return
    for v in range(g.n):
        p = reconstruct_path(table, v)
        if path_weight(g, p) != table.lam[v]:
            report.mismatches.append(f"{tag}: recorded path to {v} does not sum to its distance")
            return


def verify_suite(
    graphs: int = 200,
    max_n: int = 32,
    bipartite_graphs: int = 100,
    max_part: int = 16,
    algorithms=ALGORITHMS,
    modes=MODE_NAMES,
    seed: int = 0,
    inject_fault: bool = False,
) -> VerifyReport:
    """Compare every requested algorithm/mode against the oracles.

    Graph ``i`` uses seed ``seed + i`` and size ``1 + (seed + i) % max_n``
    (bipartite: ``n1 = 1 + i % max_part``, ``n2 = 1 + (i * 7) % max_part``).
    With ``inject_fault`` the oracle sees a corrupted copy of each graph,
    which must produce mismatches.
    """
    report = VerifyReport()
    complete_algs = [a for a in algorithms if a != "bipartite"]
    for i in range(graphs if complete_algs else 0):
        s = seed + i
        n = 1 + s % max_n
        g = graph_for("dijkstra-classic", s, n)
        gs = graph_for("prim-classic", s, n)
        ref_g = _corrupt(g) if inject_fault else g
        ref_gs = _corrupt(gs) if inject_fault else gs
        dist = floyd_warshall(ref_g)
        mst_w = kruskal_mst(ref_gs).total_weight
        for alg in complete_algs:
            for mode_name in modes:
                tag = f"{alg}/{mode_name}/seed={s}/n={n}"
                mode = parse_mode(mode_name, s)
                if alg in PATH_ALGORITHMS:
                    for v0 in sorted({0, n - 1}):
                        table, _ = execute(alg, g, mode, v0)
                        _check_paths(f"{tag}/v0={v0}", g, table, dist[v0], report)
                elif alg in TREE_ALGORITHMS:
                    tree, _ = execute(alg, gs, mode)
                    _check_tree(tag, gs, tree, mst_w, report)
                else:
                    value, _ = execute(alg, g, mode)
                    if value != dist.max():
                        report.mismatches.append(f"{tag}: diameter {value!r} != oracle {dist.max()!r}")
                report.checked += 1
    if "bipartite" in algorithms:
        for i in range(bipartite_graphs):
            s = seed + i
            n1, n2 = 1 + i % max_part, 1 + (i * 7) % max_part
            g = graph_for("bipartite", s, n1=n1, n2=n2)
            dist = floyd_warshall(_corrupt(g) if inject_fault else g)
            for mode_name in modes:
                tag = f"bipartite/{mode_name}/seed={s}/n1={n1}/n2={n2}"
                t = bipartite_partial(g, 0, parse_mode(mode_name, s))
                got = np.concatenate([t.lam1, t.lam2])
                bad = np.flatnonzero(got != dist[0])
                if bad.size:
                    v = int(bad[0])
                    where = (1, v) if v < n1 else (2, v - n1)
                    report.mismatches.append(
                        f"{tag}: distance to {where} is {float(got[v])!r}, oracle says {float(dist[0][v])!r}"
                    )
                else:
                    for part, size in ((1, n1), (2, n2)):
                        for j in range(size):
                            p = reconstruct_path(t, (part, j))
                            if path_weight(g, p) != got[j if part == 1 else n1 + j]:
                                report.mismatches.append(f"{tag}: recorded path to {(part, j)} is wrong")
                report.checked += 1
    return report


__all__ = [
    "ALGORITHMS",
    "COLUMNS",
    "ConfigError",
    "ExponentFit",
    "RunConfig",
    "VerifyReport",
    "checksum",
    "cmd_ksweep",
    "cmd_run",
    "cmd_scaling",
    "execute",
    "fit_exponent",
    "fit_power_law",
    "graph_for",
    "rows_to_csv",
    "rows_to_json",
    "verify_suite",
]
