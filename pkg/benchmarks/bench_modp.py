"""Benchmark the F_p rank kernel: numba @njit versus the numpy fallback.

The E-invariant sampler spends essentially all of its time here, so the two
paths are compared on matrix shapes matching the rigidity sweeps.  Run with

    python benchmarks/bench_modp.py            # jit path (default)
    GRASCAT_NO_NUMBA=1 python benchmarks/bench_modp.py   # numpy fallback

or pass --both to time the two implementations side by side in one process.
"""

import argparse
import time

import numpy as np

from grascat import modp


def bench(fn, matrices, repeats=3) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in matrices:
            fn(m)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--both", action="store_true",
                        help="time jit and numpy paths in one process")
    parser.add_argument("--count", type=int, default=400, help="matrices per shape")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    shapes = [(8, 8), (16, 24), (32, 48), (72, 72), (128, 160)]

    print(f"active backend: {modp.backend()}")
    header = f"{'shape':>12} {'matrices':>9} {'active':>12}"
    if args.both and modp.backend() == "numba":
        header += f" {'numpy':>12} {'speedup':>9}"
    print(header)

    for rows, cols in shapes:
        matrices = [
            rng.integers(0, modp.PRIME, size=(rows, cols), dtype=np.int64)
            for _ in range(args.count)
        ]
        modp.rank_mod_p(matrices[0])  # warm the jit cache before timing
        active = bench(modp.rank_mod_p, matrices)
        line = f"{rows}x{cols:>4} {len(matrices):>9} {active:>11.4f}s"
        if args.both and modp.backend() == "numba":
            fallback = bench(modp._rank_mod_p_numpy, matrices)
            line += f" {fallback:>11.4f}s {fallback / active:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
