"""``qgraph`` command line: run, verify, scaling, ksweep, gen."""

from __future__ import annotations

import argparse
import sys

from qgraph import experiments as ex
from qgraph.graph import GraphGenSpec, format_graph, generate, save_graph
from qgraph.minsearch import MODE_NAMES


def _k(text):
    if text == "auto":
        return text
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer or 'auto', got {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError("k must be >= 1")
    return k


def _sizes(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def _emit(rows, args):
    text = ex.rows_to_json(rows) if args.format == "json" else ex.rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_run(args):
    cfg = ex.RunConfig(
        algorithm=args.algorithm, mode=args.mode, n=args.n, n1=args.n1, n2=args.n2,
        k=args.k, v0=args.v0, seed=args.seed, trials=args.trials or 1, graph_file=args.graph_file,
    )
    _emit(ex.cmd_run(cfg), args)
    return 0


def cmd_verify(args):
    algorithms = [args.algorithm] if args.algorithm else ex.ALGORITHMS
    modes = [args.mode] if args.mode else MODE_NAMES
    report = ex.verify_suite(
        graphs=args.trials, max_n=args.n or 32, bipartite_graphs=args.bipartite_trials,
        max_part=args.n2 or 16, algorithms=algorithms, modes=modes, seed=args.seed,
        inject_fault=args.inject_fault,
    )
    for line in report.mismatches[:50]:
        print("MISMATCH", line)
    if len(report.mismatches) > 50:
        print(f"... {len(report.mismatches) - 50} more")
    status = "PASS" if report.ok else "FAIL"
    print(f"{status}: {report.checked} checks, {len(report.mismatches)} mismatches")
    return 0 if report.ok else 1


def cmd_scaling(args):
    rows, fit, verdict = ex.cmd_scaling(
        args.algorithm, args.mode, args.sizes, k=args.k, trials=args.trials, seed=args.seed, n1=args.n1
    )
    if args.out:
        _emit(rows, args)
    window = ex.slope_window(args.algorithm, args.mode)
    print(f"slope={fit.slope:.4f} intercept={fit.intercept:.4f} residual={fit.residual:.2e}")
    if window is None:
        print("no tolerance window defined for this algorithm/mode")
        return 0
    print(f"window [{window[0]}, {window[1]}]: {'PASS' if verdict else 'FAIL'}")
    return 0 if verdict else 1


def cmd_ksweep(args):
    rows, best_k, ok = ex.cmd_ksweep(args.algorithm, args.n, args.mode, seed=args.seed)
    if args.out:
        _emit(rows, args)
    for r in rows:
        print(f"k={r['k']:>5}  total={r['total']}")
    print(f"best k={best_k}; within factor 2 of ceil(sqrt(n)): {'yes' if ok else 'no'}")
    return 0


def cmd_gen(args):
    if args.n1 or args.n2:
        spec = GraphGenSpec("bipartite", n1=args.n1 or 0, n2=args.n2 or 0, seed=args.seed)
    else:
        spec = GraphGenSpec("complete", n=args.n or 0, seed=args.seed, symmetric=args.symmetric)
    g = generate(spec)
    if args.out:
        save_graph(g, args.out)
    else:
        sys.stdout.write(format_graph(g))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="qgraph", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, algorithm_required=False):
        sp.add_argument("--algorithm", choices=ex.ALGORITHMS, required=algorithm_required)
        sp.add_argument("--mode", choices=MODE_NAMES)
        sp.add_argument("--n", type=int)
        sp.add_argument("--n1", type=int)
        sp.add_argument("--n2", type=int)
        sp.add_argument("--k", type=_k)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--trials", type=int)
        sp.add_argument("--sizes", type=_sizes)
        sp.add_argument("--graph-file")
        sp.add_argument("--out")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--v0", type=int, default=0)

    sp = sub.add_parser("run", help="run one algorithm and emit cost rows")
    common(sp, algorithm_required=True)
    sp.set_defaults(func=cmd_run, mode="classical")

    sp = sub.add_parser("verify", help="check outputs against reference oracles")
    common(sp)
    sp.add_argument("--bipartite-trials", type=int, default=100)
    sp.add_argument("--inject-fault", action="store_true",
                    help="feed the oracles a corrupted graph (negative control)")
    sp.set_defaults(func=cmd_verify, trials=200)

    sp = sub.add_parser("scaling", help="sweep sizes and fit the cost exponent")
    common(sp, algorithm_required=True)
    sp.set_defaults(func=cmd_scaling, mode="ideal-quantum", sizes=[64, 128, 256, 512, 1024])

    sp = sub.add_parser("ksweep", help="total cost against the flush period k")
    common(sp)
    sp.set_defaults(func=cmd_ksweep, algorithm="dijkstra-periodic", mode="ideal-quantum", n=1024)

    sp = sub.add_parser("gen", help="write a seeded random graph")
    common(sp)
    sp.add_argument("--symmetric", action="store_true")
    sp.set_defaults(func=cmd_gen)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command != "verify" and args.mode is None:
        args.mode = "classical"
    try:
        return args.func(args)
    except (ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
