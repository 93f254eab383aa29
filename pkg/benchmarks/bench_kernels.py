"""Time the float kernels under the numba and numpy backends.

    python benchmarks/bench_kernels.py [--repeat 3] [--scale 1.0]

The first numba call per signature includes compilation (cached on disk
afterwards), so each kernel is warmed up once before timing.
"""

import argparse
import time

import numpy as np

from partnorm import _kernels as K


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def cases(scale):
    M = int(20_000_000 * scale)
    P = int(50_000_000 * scale)
    x = np.arange(1, int(20_000 * scale) + 1, dtype=np.float64) ** -2.0
    return [
        (f"euler log-sum, n <= {M:.0e}", lambda b: K.log_sum_range(2, M, 1, 2.0, K.EULER, backend=b)),
        (f"prime sieve log-sum, p <= {P:.0e}", lambda b: K.log_sum_primes(1, P, 2.0, backend=b)),
        (f"complete homogeneous h_6, {len(x)} vars", lambda b: K.complete_homogeneous(x, 6, backend=b)),
        (f"multiplicative table, nu <= {int(2e6 * scale):.0e}",
         lambda b: K.multiplicative_table(int(2e6 * scale), backend=b)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply problem sizes")
    args = ap.parse_args()
    backends = ["numba", "numpy"] if K.HAVE_NUMBA else ["numpy"]
    print(f"{'kernel':45s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, fn in cases(args.scale):
        row = {}
        for b in backends:
            fn(b) if b == "numba" else None  # compile
            row[b] = best_of(lambda: fn(b), args.repeat)[0]
        speed = row["numpy"] / row["numba"] if "numba" in row else float("nan")
        print(f"{name:45s} " + " ".join(f"{row[b]:9.3f}s" for b in backends) + f"   {speed:6.1f}x")


if __name__ == "__main__":
    main()
