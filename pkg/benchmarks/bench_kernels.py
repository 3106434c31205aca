"""Compare the compiled and pure-Python kernels on representative workloads.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from kclosure import _backend, engine, korbit
from kclosure.catalog import get

WORKLOADS = [
    ("k_orbits", "Q8+C3-sum", 3),
    ("oracle", "Q8-regular", 2),
    ("oracle", "D4-natural", 3),
    ("backtrack", "C12-regular", 3),
    ("backtrack", "C4xC3-product", 2),
    ("backtrack", "Q8+C3-sum", 2),
]


def run(kind, G, k):
    if kind == "k_orbits":
        return korbit.k_orbits(G, k).count
    if kind == "oracle":
        return engine.closure_oracle(G, k).element_count
    return engine.closure_backtrack(G, k).element_count


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - start)
    return min(times), value


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _backend.available()
    names = [m.BACKEND for m in backends]
    print(f"{'workload':<30}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for kind, name, k in WORKLOADS:
        G = get(name).group()
        G.chain  # build once, outside the timing
        row, results = [], set()
        for mod in backends:
            engine.kernels = korbit.kernels = mod
            seconds, value = best_of(args.repeat, lambda: run(kind, G, k))
            row.append(seconds)
            results.add(value)
        assert len(results) == 1, f"backends disagree on {kind} {name}"
        label = f"{kind} {name} k={k}"
        speed = f"{row[-1] / row[0]:>9.1f}x" if len(row) > 1 else f"{'-':>10}"
        print(f"{label:<30}" + "".join(f"{s * 1000:>10.1f}ms" for s in row) + speed)
    engine.kernels = korbit.kernels = _backend.kernels


if __name__ == "__main__":
    main()
