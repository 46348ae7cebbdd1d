"""Benchmark the numba and numpy flavours of the scan kernels.

Usage: python benchmarks/bench_kernels.py [repeats]

Times the exhaustive lattice box scan (9 * 7^7 = 7.4M points) and the
56 x 56 difference-class sweep under both backends.  The numba path is
compiled once before timing; the report shows best-of-N wall times.
"""

import os
import sys
import time

import numpy as np


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5

    from dp2 import kernels
    from dp2.galois import _cohomology
    from dp2.picard import enumerate_exceptional

    curves = np.array([c.cls.coeffs for c in enumerate_exceptional()], dtype=np.int64)
    clsmat = np.array(_cohomology().class_matrix, dtype=np.int64)

    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    jobs = {
        "box_scan (7.4M lattice points)": lambda: kernels.box_scan(),
        "pair_class_codes (56 x 56)": lambda: kernels.pair_class_codes(curves, clsmat),
    }

    results = {}
    for backend in backends:
        os.environ["DP2_BACKEND"] = backend
        for name, job in jobs.items():
            job()  # warm up (JIT compile / cache load)
            results[(backend, name)] = best_of(job, repeats)

    width = max(len(name) for name in jobs)
    print(f"{'kernel':{width}}  " + "  ".join(f"{b:>12}" for b in backends)
          + ("  speedup" if len(backends) == 2 else ""))
    for name in jobs:
        row = [results[(b, name)] for b in backends]
        line = f"{name:{width}}  " + "  ".join(f"{t * 1e3:9.2f} ms" for t in row)
        if len(row) == 2:
            line += f"  {row[0] / row[1]:6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
