import math

import numpy as np
import pytest

from conftest import complete
from qgraph.graph import CompleteGraph
from qgraph.oracles import (
    brute_force_paths,
    exhaustive_mst_weight,
    floyd_warshall,
    kruskal_mst,
    prufer_trees,
)


def test_floyd_warshall_agrees_with_brute_force():
    for seed in range(100):
        n = 1 + seed % 7
        g = complete(n, seed)
        d = floyd_warshall(g)
        for v0 in range(n):
            assert np.array_equal(d[v0], brute_force_paths(g, v0).lam)


def test_floyd_warshall_triangle_inequality():
    d = floyd_warshall(complete(15, 4))
    assert (np.diag(d) == 0).all()
    for m in range(15):
        assert (d <= d[:, m, None] + d[None, m, :]).all()


def test_floyd_warshall_hand_example():
    g = CompleteGraph([[0, 5, 7], [5, 0, 1], [7, 1, 0]])
    assert floyd_warshall(g).tolist() == [[0, 5, 6], [5, 0, 1], [6, 1, 0]]


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
def test_prufer_enumerates_cayley_many_distinct_trees(n, count):
    trees = {frozenset(t) for t in prufer_trees(n)}
    assert len(trees) == count == max(1, n ** (n - 2))
    for t in trees:
        assert len(t) == n - 1


def test_kruskal_matches_exhaustive_on_five_vertices():
    for seed in range(20):
        g = complete(5, seed, symmetric=True)
        assert kruskal_mst(g).total_weight == exhaustive_mst_weight(g)


def test_oracles_refuse_oversized_inputs():
    with pytest.raises(ValueError):
        brute_force_paths(complete(9, 0), 0)
    with pytest.raises(ValueError):
        exhaustive_mst_weight(complete(8, 0, symmetric=True))


def test_floyd_warshall_keeps_unreachable_pairs_infinite():
    g = CompleteGraph([[0, 1.0, math.inf], [math.inf, 0, math.inf], [math.inf, math.inf, 0]])
    d = floyd_warshall(g)
    assert d[0, 1] == 1.0 and math.isinf(d[0, 2]) and math.isinf(d[1, 0])
