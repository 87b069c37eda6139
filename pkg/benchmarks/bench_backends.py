"""Time the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_backends.py [--n 256] [--repeat 3]
"""

import argparse
import time

from qgraph import HAVE_CORE, use_backend
from qgraph.graph import GraphGenSpec, generate
from qgraph.minsearch import IdealQuantum
from qgraph.mst import prim_classic, prim_no_update, prim_periodic
from qgraph.paths import bipartite_partial, dijkstra_classic, dijkstra_no_update, dijkstra_periodic


def cases(n):
    g = generate(GraphGenSpec("complete", n=n, seed=1))
    gs = generate(GraphGenSpec("complete", n=n, seed=1, symmetric=True))
    gb = generate(GraphGenSpec("bipartite", n1=8, n2=4 * n, seed=1))
    mode = IdealQuantum()
    return {
        "dijkstra-classic": lambda: dijkstra_classic(g, 0, mode),
        "dijkstra-no-update": lambda: dijkstra_no_update(g, 0, mode),
        "dijkstra-periodic": lambda: dijkstra_periodic(g, 0, "auto", mode),
        "prim-classic": lambda: prim_classic(gs, 0, mode),
        "prim-no-update": lambda: prim_no_update(gs, 0, mode),
        "prim-periodic": lambda: prim_periodic(gs, 0, "auto", mode),
        "bipartite": lambda: bipartite_partial(gb, 0, mode),
    }


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=256)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    if not HAVE_CORE:
        raise SystemExit("compiled core not built; run `pip install -e . --no-build-isolation`")

    print(f"n={args.n}, best of {args.repeat}")
    print(f"{'algorithm':<20} {'python [s]':>11} {'compiled [s]':>13} {'speedup':>8}")
    for name, fn in cases(args.n).items():
        with use_backend("python"):
            tp = best_time(fn, args.repeat)
        with use_backend("compiled"):
            tc = best_time(fn, args.repeat)
        print(f"{name:<20} {tp:>11.4f} {tc:>13.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
