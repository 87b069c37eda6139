import numpy as np
import pytest

from conftest import bipartite, complete
from qgraph import HAVE_CORE, use_backend
from qgraph.minsearch import Classical, IdealQuantum, QueryLedger
from qgraph.mst import prim_classic, prim_no_update, prim_periodic
from qgraph.paths import bipartite_partial, dijkstra_classic, dijkstra_no_update, dijkstra_periodic

pytestmark = pytest.mark.skipif(not HAVE_CORE, reason="compiled core not built")


def run_both(fn, *args):
    out = {}
    for name in ("python", "compiled"):
        with use_backend(name):
            led = QueryLedger()
            out[name] = (fn(*args, led), led.phase_breakdown, led.setup_reads)
    return out["python"], out["compiled"]


@pytest.mark.parametrize("mode", [Classical(), IdealQuantum()], ids=["classical", "ideal"])
@pytest.mark.parametrize("n", [1, 2, 7, 33])
def test_path_kernels_agree(mode, n):
    g = complete(n, n)
    cases = [
        lambda led: dijkstra_classic(g, n - 1, mode, led),
        lambda led: dijkstra_no_update(g, 0, mode, led),
        lambda led: dijkstra_periodic(g, 0, 1, mode, led),
        lambda led: dijkstra_periodic(g, n // 2, 5, mode, led),
    ]
    for case in cases:
        (a, la, sa), (b, lb, sb) = run_both(case)
        assert np.array_equal(a.lam, b.lam)
        assert np.array_equal(a.pred, b.pred)
        assert np.array_equal(a.order, b.order)
        assert (la, sa) == (lb, sb)


@pytest.mark.parametrize("mode", [Classical(), IdealQuantum()], ids=["classical", "ideal"])
@pytest.mark.parametrize("n", [1, 2, 9, 40])
def test_tree_kernels_agree(mode, n):
    g = complete(n, n, symmetric=True)
    cases = [
        lambda led: prim_classic(g, 0, mode, led),
        lambda led: prim_no_update(g, n - 1, mode, led),
        lambda led: prim_periodic(g, 0, 3, mode, led),
    ]
    for case in cases:
        (a, la, sa), (b, lb, sb) = run_both(case)
        assert a.edges == b.edges
        assert np.array_equal(a.order, b.order)
        assert np.array_equal(a.settle_key, b.settle_key)
        assert np.array_equal(a.via_l, b.via_l)
        assert (la, sa) == (lb, sb)


@pytest.mark.parametrize("mode", [Classical(), IdealQuantum()], ids=["classical", "ideal"])
@pytest.mark.parametrize("n1,n2", [(1, 1), (3, 8), (9, 4)])
def test_bipartite_kernel_agrees(mode, n1, n2):
    g = bipartite(n1, n2, n1 * n2)
    (a, la, _), (b, lb, _) = run_both(lambda led: bipartite_partial(g, n1 - 1, mode, led))
    assert np.array_equal(a.lam1, b.lam1) and np.array_equal(a.lam2, b.lam2)
    assert np.array_equal(a.pred1, b.pred1) and np.array_equal(a.pred2, b.pred2)
    assert la == lb
