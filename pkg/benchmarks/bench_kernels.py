"""Jacobi eigensolver: numba kernel versus the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--sizes 8 16 32 64] [--repeat 5]

The numba timing excludes the first (compiling) call.
"""

import argparse
import time

import numpy as np

from scgraphs._accel import NUMBA_AVAILABLE
from scgraphs.kernels import jacobi_eigh


def random_adjacency(n, rng, p=0.5):
    upper = np.triu(rng.random((n, n)) < p, 1).astype(float)
    return upper + upper.T


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64, 128])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    backends = ["numpy"] + (["numba"] if NUMBA_AVAILABLE else [])
    if NUMBA_AVAILABLE:
        jacobi_eigh(np.eye(3), backend="numba")  # compile

    print(f"{'n':>5} " + " ".join(f"{b + ' (ms)':>14}" for b in backends) + f" {'speedup':>9} {'max |dw|':>10}")
    for n in args.sizes:
        a = random_adjacency(n, rng)
        times, results = {}, {}
        for b in backends:
            times[b] = best_of(lambda: jacobi_eigh(a, backend=b), args.repeat) * 1e3
            results[b] = jacobi_eigh(a, backend=b)[0]
        row = f"{n:>5} " + " ".join(f"{times[b]:>14.3f}" for b in backends)
        if len(backends) == 2:
            diff = float(np.max(np.abs(results["numpy"] - results["numba"])))
            row += f" {times['numpy'] / times['numba']:>8.1f}x {diff:>10.1e}"
        print(row)


if __name__ == "__main__":
    main()
