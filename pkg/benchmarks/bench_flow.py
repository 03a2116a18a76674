"""Compare the compiled and pure-Python max-flow kernels.

    python benchmarks/bench_flow.py [--sizes 20 40 80] [--repeat 5]

Times density-test flows on random graphs and a full mad() computation
per size, once with each kernel.
"""

import argparse
import time
from fractions import Fraction

from madcolor import flow
from madcolor.graph import gnm
from madcolor.mad import density_network, densest_subgraph


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 80, 160])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()

    backends = ["python"] + (["cython"] if flow.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel not built; timing the Python kernel only")
    print(f"{'n':>5} {'m':>6} {'kernel':>8} {'flow ms':>10} {'mad ms':>10}")
    for n in args.sizes:
        g = gnm(n, 2 * n, seed=n)
        t = Fraction(g.m, g.n)
        net = density_network(g, t.numerator, t.denominator)
        base = {}
        for be in backends:
            f = best_of(lambda: flow.max_flow(net, backend=be), args.repeat)
            m = best_of(lambda: densest_subgraph(g, backend=be), args.repeat)
            base.setdefault("flow", f)
            base.setdefault("mad", m)
            speed = "" if be == "python" else f"  x{base['flow'] / f:.1f} / x{base['mad'] / m:.1f}"
            print(f"{n:>5} {g.m:>6} {be:>8} {1e3 * f:>10.2f} {1e3 * m:>10.2f}{speed}")


if __name__ == "__main__":
    main()
