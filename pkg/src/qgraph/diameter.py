"""Graph diameter as an outer maximum search over per-source eccentricities.

Each eccentricity comes from one run of a Dijkstra variant (the "inner"
algorithm). The outer search is charged ``Q / n`` times the summed inner
cost, where ``Q`` is the number of outer queries the finder mode spends:
``n`` for Classical (so the charge is the exact sum), ``ceil(sqrt(n))`` for
IdealQuantum, and the simulated walk length for DHSim. Every eccentricity
is computed once and memoized, so all modes return the exact diameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from qgraph.minsearch import Classical, QueryLedger, find_max, parse_mode
from qgraph.paths import dijkstra_classic, dijkstra_no_update, dijkstra_periodic, resolve_k

__all__ = ["DiameterResult", "EccentricityRecord", "INNER", "diameter", "diameter_run", "eccentricity"]

INNER = {
    "dijkstra-classic": dijkstra_classic,
    "dijkstra-no-update": dijkstra_no_update,
    "dijkstra-periodic": dijkstra_periodic,
}


@dataclass
class EccentricityRecord:
    v0: int
    ecc: float
    inner_cost: int
    last_settled: int


@dataclass
class DiameterResult:
    value: float
    argmax: int
    records: list
    outer_queries: int


def _inner_run(g, v0, inner, k, mode):
    if inner not in INNER:
        raise ValueError(f"unknown inner algorithm {inner!r}; expected one of {sorted(INNER)}")
    sub = QueryLedger()
    if inner == "dijkstra-periodic":
        table = dijkstra_periodic(g, v0, resolve_k(k, g.n), mode, sub)
    elif k not in (None, "auto"):
        raise ValueError(f"k only applies to the periodic inner algorithm, not {inner!r}")
    else:
        table = INNER[inner](g, v0, mode, sub)
    rec = EccentricityRecord(
        v0=v0, ecc=float(table.lam.max()), inner_cost=sub.total, last_settled=int(table.order[-1])
    )
    return rec, sub


def eccentricity(
    g, v0, inner="dijkstra-periodic", k="auto", mode="classical", ledger=None
) -> EccentricityRecord:
    """Largest shortest-path distance from ``v0``, via one inner run.

    The inner run's charges are added to ``ledger`` unchanged.
    """
    rec, sub = _inner_run(g, v0, inner, k, parse_mode(mode))
    if ledger is not None:
        ledger.merge(sub)
    return rec


def diameter_run(g, inner="dijkstra-periodic", k="auto", mode="classical", ledger=None) -> DiameterResult:
    """Diameter plus the per-source records and outer query count."""
    mode = parse_mode(mode)
    ledger = QueryLedger() if ledger is None else ledger
    n = g.n
    pooled = QueryLedger()
    records = []
    for v0 in range(n):
        rec, sub = _inner_run(g, v0, inner, k, mode)
        pooled.merge(sub)
        records.append(rec)
    keys = np.array([r.ecc for r in records])
    counter = QueryLedger()
    argmax, value = find_max(keys, mode, counter, phase="outer")
    outer_queries = counter.total
    scale = 1 if isinstance(mode, Classical) else Fraction(outer_queries, n)
    ledger.merge(pooled, scale)
    return DiameterResult(value=value, argmax=argmax, records=records, outer_queries=outer_queries)


def diameter(g, inner="dijkstra-periodic", k="auto", mode="classical", ledger=None) -> float:
    """Largest shortest-path distance over all ordered vertex pairs."""
    return diameter_run(g, inner, k, mode, ledger).value
