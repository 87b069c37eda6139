"""Hybrid quantum/classical graph algorithms under a query-cost model.

Shortest paths, spanning trees, diameters and bipartite shortest paths on
dense complete graphs, with every minimum search charged to a
:class:`~qgraph.minsearch.QueryLedger` according to a pluggable finder mode.
"""

from qgraph._backend import HAVE_CORE, get_backend, set_backend, use_backend
from qgraph.diameter import EccentricityRecord, diameter, diameter_run, eccentricity
from qgraph.graph import (
    BipartiteGraph,
    CompleteGraph,
    GraphGenSpec,
    generate,
    load_graph,
    save_graph,
    weight,
)
from qgraph.minsearch import (
    Classical,
    DHSim,
    IdealQuantum,
    QueryLedger,
    find_max,
    find_min,
    parse_mode,
)
from qgraph.mst import TreeResult, prim_classic, prim_no_update, prim_periodic
from qgraph.paths import (
    BipartitePathTable,
    PathTable,
    bipartite_partial,
    dijkstra_classic,
    dijkstra_no_update,
    dijkstra_periodic,
    reconstruct_path,
)

__version__ = "0.1.0"
