"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 1000 100000] [--repeat 5]
"""

import argparse
import time

import numpy as np

from gentle_orders._accel import numba_kernels, numpy_kernels


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def inputs(n, rng):
    sigma = rng.permutation(n).astype(np.int64)
    theta = np.arange(n, dtype=np.int64)
    moved = rng.permutation(n)[: n // 2 * 2]
    theta[moved[0::2]], theta[moved[1::2]] = moved[1::2], moved[0::2]
    phi = theta[sigma]
    marked = theta == np.arange(n)
    return sigma, theta, phi, marked


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 100_000, 1_000_000])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if numba_kernels is None:
        print("numba is not importable; nothing to compare")
        return 1
    rng = np.random.default_rng(args.seed)
    # compile once outside the timings
    s, t, f, m = inputs(16, rng)
    for k in (numba_kernels, numpy_kernels):
        k.orbit_labels(s), k.cycle_order(s), k.next_marked(f, m), k.component_labels(s, t)

    print(f"{'kernel':<18}{'n':>10}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for n in args.sizes:
        s, t, f, m = inputs(n, rng)
        cases = {
            "orbit_labels": lambda k: k.orbit_labels(s),
            "cycle_order": lambda k: k.cycle_order(s),
            "next_marked": lambda k: k.next_marked(f, m),
            "component_labels": lambda k: k.component_labels(s, t),
        }
        for name, call in cases.items():
            a = call(numba_kernels)
            b = call(numpy_kernels)
            same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) \
                else np.array_equal(a, b)
            if not same:
                raise SystemExit(f"{name}: backends disagree at n={n}")
            tj = best_of(lambda: call(numba_kernels), args.repeat)
            tn = best_of(lambda: call(numpy_kernels), args.repeat)
            print(f"{name:<18}{n:>10}{tj * 1e3:>12.3f}{tn * 1e3:>12.3f}{tn / tj:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
