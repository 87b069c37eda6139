import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete
from qgraph.graph import CompleteGraph
from qgraph.minsearch import Classical, DHSim, IdealQuantum, QueryLedger, ceil_sqrt
from qgraph.mst import prim_classic, prim_no_update, prim_periodic, tree_weight
from qgraph.oracles import exhaustive_mst_weight, kruskal_mst
from test_paths import classic_cost, no_update_cost, periodic_cost

MODES = [Classical, IdealQuantum, lambda: DHSim(3)]


def variants(k=3):
    return [prim_classic, prim_no_update, lambda g, v0=0, mode="classical", ledger=None: prim_periodic(g, v0, k, mode, ledger)]


def is_spanning_tree(n, edges):
    parent = list(range(n))

    def root(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = root(u), root(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return len(edges) == n - 1


def test_three_vertex_example(backend):
    g = CompleteGraph([[0, 5, 7], [5, 0, 1], [7, 1, 0]])
    for fn in variants(2):
        for mode in MODES:
            t = fn(g, 0, mode())
            assert t.edge_set == {(0, 1), (1, 2)}
            assert t.total_weight == 6


def test_single_and_two_vertex(backend):
    g1 = CompleteGraph([[0.0]])
    g2 = CompleteGraph([[0, 0.5], [0.5, 0]])
    for fn in variants(1):
        assert fn(g1).edges == []
        assert fn(g1).total_weight == 0
        assert fn(g2).edges == [(0, 1)]


@pytest.mark.parametrize("seed", range(15))
def test_matches_kruskal(backend, seed):
    n = 2 + seed * 3
    g = complete(n, seed, symmetric=True)
    ref = kruskal_mst(g)
    for fn in variants(1 + seed % 5):
        for mode in MODES:
            t = fn(g, seed % n, mode())
            assert is_spanning_tree(n, t.edges)
            assert t.total_weight == ref.total_weight
            # generated weights are distinct, so the tree itself is unique
            assert t.edge_set == ref.edge_set


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_exhaustive_enumeration(n):
    for seed in range(3):
        g = complete(n, 50 + seed, symmetric=True)
        best = exhaustive_mst_weight(g)
        for fn in variants(2):
            assert fn(g).total_weight == best


def test_settle_keys_are_cheapest_crossing_edges(backend):
    for seed in range(8):
        n = 24
        g = complete(n, seed, symmetric=True)
        W = g.weights
        for fn in variants(4):
            t = fn(g, 0, IdealQuantum())
            for i in range(1, n):
                inside, v = t.order[:i], t.order[i]
                outside = t.order[i:]
                assert t.settle_key[i] == W[np.ix_(inside, outside)].min()
                assert t.settle_key[i] in W[inside, v]


def test_periodic_l_array_is_sound(backend):
    # every stored L value is the weight of a real edge to M
    g = complete(30, 9, symmetric=True)
    W = g.weights
    t = prim_periodic(g, 0, 5)
    for v in range(1, 30):
        assert t.L[v] == W[t.M[v], v]
    assert t.via_l.any() and not t.via_l[1:].all()


def test_periodic_k1_takes_everything_from_l(backend):
    t = prim_periodic(complete(16, 2, symmetric=True), 0, 1)
    assert t.via_l.all()


@pytest.mark.parametrize("n", [1, 2, 7, 16, 40])
def test_ledger_closed_forms(backend, n):
    g = complete(n, n, symmetric=True)
    led = QueryLedger()
    prim_classic(g, 0, Classical(), led)
    assert led.total == classic_cost(n)
    led = QueryLedger()
    prim_no_update(g, 0, IdealQuantum(), led)
    assert led.total == no_update_cost(n, ceil_sqrt)
    for k in (1, 3, max(1, ceil_sqrt(n))):
        led = QueryLedger()
        prim_periodic(g, 0, k, Classical(), led)
        assert (led.search_queries, led.update_queries) == periodic_cost(n, k)


def test_rejects_asymmetric_and_incomplete():
    with pytest.raises(ValueError):
        prim_classic(complete(4, 1))
    with pytest.raises(ValueError):
        prim_periodic(CompleteGraph([[0, np.inf], [np.inf, 0]]), 0, 1)
    with pytest.raises(IndexError):
        prim_no_update(complete(4, 1, symmetric=True), 4)
    with pytest.raises(ValueError):
        kruskal_mst(complete(4, 1))


def test_tree_weight_is_order_independent():
    W = complete(6, 3, symmetric=True).weights
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
    assert tree_weight(W, edges) == tree_weight(W, edges[::-1])


@settings(max_examples=25, deadline=None)
@given(n=st.integers(1, 6), seed=st.integers(0, 2**32), k=st.integers(1, 6))
def test_random_small_graphs_match_exhaustive(n, seed, k):
    g = complete(n, seed, symmetric=True)
    best = exhaustive_mst_weight(g)
    assert prim_periodic(g, 0, k, DHSim(seed)).total_weight == best
    assert prim_no_update(g, n - 1, IdealQuantum()).total_weight == best
