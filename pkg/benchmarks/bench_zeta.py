"""Benchmark the Euler-Maclaurin kernel: compiled extension vs the
pure-Python fallback, plus an end-to-end critical-line scan timing.

Run as: python benchmarks/bench_zeta.py
"""

import argparse
import time

from rzlab import _backend
from rzlab._kernels_py import zeta_em as zeta_em_py

try:
    from rzlab._kernels import zeta_em as zeta_em_c
except ImportError:
    zeta_em_c = None


def time_kernel(fn, points, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for sigma, t, n in points:
            fn(sigma, t, n)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=400)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    points = [(0.5, 1.0 + 0.25 * i, max(20, int(2.0 * (1.0 + 0.25 * i))))
              for i in range(args.points)]

    print("active backend: %s" % _backend.backend_name)
    t_py = time_kernel(zeta_em_py, points, args.repeats)
    print("pure python : %8.4f s  (%d evaluations)" % (t_py, len(points)))
    if zeta_em_c is None:
        print("compiled    : not built")
        return
    t_c = time_kernel(zeta_em_c, points, args.repeats)
    print("compiled    : %8.4f s  (%d evaluations)" % (t_c, len(points)))
    print("speedup     : %6.2fx" % (t_py / t_c))

    worst = max(abs(zeta_em_c(s, t, n) - zeta_em_py(s, t, n))
                for s, t, n in points[::10])
    print("max backend disagreement on the sample: %.3g" % worst)

    from rzlab.zeros import find_zeros
    start = time.perf_counter()
    zeros = find_zeros(0.0, 100.0, jobs=4)
    print("find_zeros(0, 100, jobs=4): %d zeros in %.3f s"
          % (len(zeros), time.perf_counter() - start))


if __name__ == "__main__":
    main()
