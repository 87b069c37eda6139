"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line through the ``report`` fixture; the lines
are printed in the "acceptance criteria" section of the pytest summary.
"""

import math
import os
import time

import numpy as np
import pytest

from conftest import complete
from qgraph import experiments as ex
from qgraph.minsearch import Classical, DHSim, QueryLedger, find_min
from qgraph.mst import prim_classic, prim_periodic
from qgraph.paths import dijkstra_classic, dijkstra_no_update, dijkstra_periodic

SIZES = [64, 128, 256, 512, 1024]


def crit1():
    t0 = time.perf_counter()
    rep = ex.verify_suite(graphs=200, max_n=32, bipartite_graphs=100, max_part=16)
    elapsed = time.perf_counter() - t0
    ok = rep.ok and elapsed < 60
    return ok, (rep.checked, len(rep.mismatches)), f"{rep.checked} checks, {len(rep.mismatches)} mismatches, {elapsed:.1f}s"


def crit2():
    bad = []
    for seed in range(50):
        n = 1 + (seed * 13) % 64
        g = complete(n, seed)
        a, b = dijkstra_periodic(g, 0, 1), dijkstra_classic(g, 0)
        if not (np.array_equal(a.lam, b.lam) and np.array_equal(a.pred, b.pred)):
            bad.append(("dijkstra", seed))
        gs = complete(n, seed, symmetric=True)
        if prim_periodic(gs, 0, 1).total_weight != prim_classic(gs, 0).total_weight:
            bad.append(("prim", seed))
    return not bad, tuple(bad), f"50 seeds, n <= 64, {len(bad)} differences"


def crit3():
    got = []
    for n in (4, 16, 64):
        g = complete(n, n)
        a, b = QueryLedger(), QueryLedger()
        dijkstra_classic(g, 0, Classical(), a)
        dijkstra_no_update(g, 0, Classical(), b)
        want_a = sum(2 * (n - i) - 1 for i in range(1, n))
        want_b = sum(i * (n - i) for i in range(1, n))
        got.append((n, a.total, want_a, b.total, want_b))
    ok = all(x[1] == x[2] and x[3] == x[4] for x in got)
    detail = "; ".join(f"n={n}: {ta}/{wa}, {tb}/{wb}" for n, ta, wa, tb, wb in got)
    return ok, tuple(got), detail


def crit7():
    out = []
    for N in (100, 10_000):
        mode = DHSim(seed=N)
        rng = np.random.default_rng(N)
        led = QueryLedger()
        exact = True
        for _ in range(1000):
            keys = rng.random(N)
            i, k = find_min(keys, mode, led)
            exact &= bool(k == keys.min() and keys[i] == k)
        out.append((N, exact, led.total / 1000 / math.sqrt(N)))
    ok = all(e and r <= 4 for _, e, r in out)
    return ok, tuple(out), ", ".join(f"N={N}: exact={e}, mean/sqrt(N)={r:.3f}" for N, e, r in out)


def test_criterion_1_correctness_suite(report):
    ok, _, detail = crit1()
    assert report(1, ok, detail), detail


def test_criterion_2_degeneration_identities(report):
    ok, _, detail = crit2()
    assert report(2, ok, detail), detail


def test_criterion_3_closed_form_ledgers(report):
    ok, _, detail = crit3()
    assert report(3, ok, detail), detail


SCALING = [
    ("dijkstra-classic", "classical", SIZES),
    ("dijkstra-no-update", "classical", SIZES),
    ("dijkstra-no-update", "ideal-quantum", SIZES),
    ("dijkstra-periodic", "ideal-quantum", SIZES),
    ("prim-periodic", "ideal-quantum", SIZES),
    ("diameter", "ideal-quantum", SIZES[:-1]),
]


@pytest.mark.parametrize("algorithm,mode,sizes", SCALING, ids=[f"{a}-{m}" for a, m, _ in SCALING])
def test_criterion_4_scaling_exponents(report, algorithm, mode, sizes):
    _, fit, verdict = ex.cmd_scaling(algorithm, mode, sizes)
    lo, hi = ex.slope_window(algorithm, mode)
    detail = f"{algorithm}/{mode} n={sizes[0]}..{sizes[-1]}: slope {fit.slope:.4f} in [{lo}, {hi}]"
    assert report(4, verdict, detail), detail


def test_criterion_5_k_balancing(report):
    rows, best_k, ok = ex.cmd_ksweep("dijkstra-periodic", 1024, "ideal-quantum")
    assert [r["k"] for r in rows] == [2**i for i in range(11)]
    detail = f"n=1024: cheapest k={best_k}, ceil(sqrt(n))=32"
    assert report(5, ok and 16 <= best_k <= 64, detail), detail


def test_criterion_6_bipartite_crossover(report):
    ratios = []
    for n2 in (64, 256, 1024, 4096):
        c = ex.cmd_run(ex.RunConfig("bipartite", "classical", n1=8, n2=n2))[0]["total"]
        q = ex.cmd_run(ex.RunConfig("bipartite", "ideal-quantum", n1=8, n2=n2))[0]["total"]
        ratios.append(q / c)
    ok = all(r < 1 for r in ratios) and all(b < a for a, b in zip(ratios, ratios[1:]))
    detail = "n1=8, quantum/classical = " + ", ".join(f"{r:.4f}" for r in ratios)
    assert report(6, ok, detail), detail


def test_criterion_7_dhsim_sanity(report):
    ok, _, detail = crit7()
    assert report(7, ok, detail), detail


def test_criterion_8_standalone_and_deterministic(report, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    first = [f()[1] for f in (crit1, crit2, crit3, crit7)]
    second = [f()[1] for f in (crit1, crit2, crit3, crit7)]
    no_files = os.listdir(tmp_path) == []
    ok = first == second and no_files
    detail = f"criteria 1-3, 7 repeat identically: {first == second}; files written: {not no_files}"
    assert report(8, ok, detail), detail
