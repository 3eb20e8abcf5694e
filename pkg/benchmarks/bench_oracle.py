"""Time the oracle scan kernel: compiled extension vs pure-Python fallback.

    python benchmarks/bench_oracle.py            # M2(F2), M2(F3), M3(F2), M2(F5)
    python benchmarks/bench_oracle.py --repeat 5
"""

import argparse
import time

import numpy as np

from coreinv import _kernels_py, kernels

CASES = [(2, 2), (3, 2), (2, 3), (5, 2)]


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernel not available; timing the fallback only")
    print(f"{'ring':>8} {'elements':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for p, n in CASES:
        ring = f"M{n}(F{p})"
        t_py, flags_py = best_of(lambda: _kernels_py.scan_flags(p, n), args.repeat)
        if kernels.BACKEND == "cython":
            t_c, flags_c = best_of(lambda: kernels.scan_flags(p, n), args.repeat)
            assert np.array_equal(flags_py, flags_c), "backends disagree"
            print(f"{ring:>8} {p ** (n * n):>9} {t_py:>10.4f} {t_c:>10.4f} {t_py / t_c:>7.0f}x")
        else:
            print(f"{ring:>8} {p ** (n * n):>9} {t_py:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
