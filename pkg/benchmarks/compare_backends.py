"""Time the compiled and pure-Python kernels on the same generated graphs.

Usage: python3 benchmarks/compare_backends.py [--nodes 18] [--density 0.5] [--graphs 3]
"""
import argparse
import statistics
import time

from meclab import GenSpec, gen_chordal
from meclab import _backend


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=18)
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--graphs", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    names = sorted(_backend.available)
    print(f"backends: {', '.join(names)}")
    print(f"{'seed':>5} {'m':>4} {'kernel':<12}" + "".join(f"{n:>12}" for n in names) + "   speedup")
    speedups = []
    for i in range(args.graphs):
        g = gen_chordal(GenSpec(args.nodes, args.density, args.seed + i))
        adj, S = g.adj_masks(), (1 << g.n) - 1
        for kernel in ("lazy_count", "eager_count"):
            secs, results = {}, set()
            for name in names:
                fn = getattr(_backend.get(name), kernel)
                total, secs[name] = timed(lambda: sum(fn(adj, S, v) for v in range(g.n)))
                results.add(total)
            assert len(results) == 1, "backends disagree"
            row = f"{args.seed + i:>5} {g.edge_count():>4} {kernel:<12}"
            row += "".join(f"{secs[n]:>11.3f}s" for n in names)
            if len(names) == 2:
                ratio = secs["python"] / secs["compiled"]
                speedups.append(ratio)
                row += f"   {ratio:6.1f}x"
            print(row)
    if speedups:
        print(f"median compiled speedup: {statistics.median(speedups):.1f}x")


if __name__ == "__main__":
    main()
