"""Time type enumeration on the numba and pure backends.

Run: python benchmarks/bench_enumerate.py [--max-degree 30] [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

from cremona_length import _kernels


def best_of(fn, d: int, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(d)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=30)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    have_numba = _kernels.BACKEND == "numba"
    if have_numba:
        t0 = time.perf_counter()
        _kernels.enumerate_proper_numba(4)
        print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s")
    else:
        print("numba backend unavailable; timing the pure backend only")

    print(f"{'d':>4} {'types':>7} {'pure [s]':>10} {'numba [s]':>10} {'speedup':>8}")
    total_pure = total_numba = 0.0
    for d in range(2, args.max_degree + 1, 2):
        n = len(_kernels.enumerate_proper_pure(d))
        tp = best_of(_kernels.enumerate_proper_pure, d, args.repeat)
        total_pure += tp
        if have_numba:
            assert _kernels.enumerate_proper_numba(d) == _kernels.enumerate_proper_pure(d)
            tn = best_of(_kernels.enumerate_proper_numba, d, args.repeat)
            total_numba += tn
            print(f"{d:>4} {n:>7} {tp:>10.4f} {tn:>10.4f} {tp / tn:>7.1f}x")
        else:
            print(f"{d:>4} {n:>7} {tp:>10.4f} {'-':>10} {'-':>8}")
    if have_numba:
        print(f"total: pure {total_pure:.2f}s, numba {total_numba:.2f}s ({total_pure / total_numba:.1f}x)")


if __name__ == "__main__":
    main()
