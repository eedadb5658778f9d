#!/usr/bin/env python3
"""Time the compiled kernels against the NumPy fallback.

Runs each kernel on the same inputs through both backends, checks the
outputs are bit-identical, and prints a speedup table. Sizes are chosen so
the quadratic kernels dominate but a laptop finishes in seconds.

Usage: python benchmarks/kernel_benchmark.py [--sizes 500,1000,2000] [--dims 8]
"""

import argparse
import time

import numpy as np

from aimk import _pykernels

try:
    from aimk import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def as_bytes(result):
    if isinstance(result, tuple):
        return b"".join(a.tobytes() for a in result)
    return result.tobytes()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="500,1000,2000",
                        help="comma-separated point counts")
    parser.add_argument("--dims", type=int, default=8, help="feature count")
    args = parser.parse_args()

    if _ckernels is None:
        raise SystemExit(
            "compiled extension not built; run pip install -e . first"
        )

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}{'n':>8}{'python':>12}{'cython':>12}{'speedup':>10}")
    for n in sizes:
        x = np.ascontiguousarray(rng.normal(size=(n, args.dims)))
        centers = np.ascontiguousarray(x[rng.choice(n, size=8, replace=False)])
        d = _ckernels.pairwise_dists(x)
        cases = [
            ("pairwise_dists", (x,)),
            ("prim_mst", (d,)),
            ("assign_nearest", (x, centers)),
        ]
        for name, inputs in cases:
            t_py, r_py = best_of(getattr(_pykernels, name), *inputs)
            t_cy, r_cy = best_of(getattr(_ckernels, name), *inputs)
            assert as_bytes(r_py) == as_bytes(r_cy), f"{name}: backends disagree"
            print(f"{name:<16}{n:>8}{t_py:>11.4f}s{t_cy:>11.4f}s{t_py / t_cy:>9.1f}x")
    print("\nall outputs bit-identical across backends")


if __name__ == "__main__":
    main()
