"""Benchmark the numba enumeration kernels against the numpy fallback.

Times the LHV brute-force maximum and the steering LHS maximum on AS_n with
the catalog Bob directions (n <= 10) or a seeded random set (larger n). The
numba kernels are warmed once before timing so JIT compilation is excluded.

Usage: python benchmarks/bench_kernels.py [--orders 8 12 16 20] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from shimony import _kernels
from shimony.catalog import SUPPORTED_SETTINGS, catalog_directions
from shimony.matrices import build_as_matrix
from shimony.seesaw import random_measurement_set


def bob_for(n: int) -> np.ndarray:
    if n in SUPPORTED_SETTINGS:
        return catalog_directions(n).bob_directions
    return random_measurement_set(n, seed=0)


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", type=int, nargs="+", default=[8, 12, 16, 20])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not _kernels.HAS_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    # Warm the JIT cache.
    warm = build_as_matrix(4)
    _kernels.lhv_max_numba(warm)
    _kernels.steering_max_numba(warm, bob_for(4))

    header = f"{'n':>4} {'kernel':>10} {'numba [s]':>12} {'numpy [s]':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in args.orders:
        m = build_as_matrix(n)
        bob = bob_for(n)

        t_nb = best_of(lambda: _kernels.lhv_max_numba(m), args.repeat)
        t_np = best_of(lambda: _kernels.lhv_max_numpy(m), args.repeat)
        assert _kernels.lhv_max_numba(m) == _kernels.lhv_max_numpy(m)
        print(f"{n:>4} {'lhv':>10} {t_nb:>12.6f} {t_np:>12.6f} {t_np / t_nb:>8.1f}x")

        t_nb = best_of(lambda: _kernels.steering_max_numba(m, bob), args.repeat)
        t_np = best_of(lambda: _kernels.steering_max_numpy(m, bob), args.repeat)
        v_nb, i_nb = _kernels.steering_max_numba(m, bob)
        v_np, i_np = _kernels.steering_max_numpy(m, bob)
        assert i_nb == i_np and abs(v_nb - v_np) < 1e-9
        print(f"{n:>4} {'steering':>10} {t_nb:>12.6f} {t_np:>12.6f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
