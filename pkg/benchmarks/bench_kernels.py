#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Run after building the extension (pip install -e . --no-build-isolation):

    python benchmarks/bench_kernels.py [N]
"""
import sys
import time

import mpmath as mp

from torsiongen import _fallback
from torsiongen import kernels

try:
    from torsiongen import _kernels as _compiled
except ImportError:
    _compiled = None


def _limbs(fp):
    return (fp >> 64) & 0xFFFFFFFFFFFFFFFF, fp & 0xFFFFFFFFFFFFFFFF


def time_backend(impl, a_fp, b_fp, N, repeats=3):
    a_hi, a_lo = _limbs(a_fp)
    b_hi, b_lo = _limbs(b_fp)
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value, skipped = impl.ergodic_weighted_sum(a_hi, a_lo, b_hi, b_lo, N)
        best = min(best, time.perf_counter() - t0)
    t0 = time.perf_counter()
    stream = impl.log_sin_stream(a_hi, a_lo, 0, 0, N)
    t_stream = time.perf_counter() - t0
    return value, best, t_stream, float(stream[: min(5, N)].sum())


def main():
    N = int(sys.argv[1]) if len(sys.argv) > 1 else 10 ** 6
    with mp.workprec(160):
        theta = mp.sqrt(2) - 1
        a_fp = kernels.fixed_point_angle(theta)
        b_fp = kernels.fixed_point_angle(theta)  # m = 1

    print(f"N = {N}, theta = sqrt(2)-1, m = 1")
    rows = []
    v_fb, t_fb, s_fb, chk_fb = time_backend(_fallback, a_fp, b_fp, N)
    rows.append(("fallback", t_fb, s_fb, v_fb))
    if _compiled is not None:
        v_cy, t_cy, s_cy, chk_cy = time_backend(_compiled, a_fp, b_fp, N)
        rows.append(("cython", t_cy, s_cy, v_cy))
        assert abs(v_cy - v_fb) < 1e-9 * N, "backends disagree"
        assert abs(chk_cy - chk_fb) < 1e-9, "streams disagree"
    else:
        print("compiled extension not available; fallback only")

    print(f"{'backend':<10} {'weighted sum':>14} {'stream':>10}   average value")
    for name, t_sum, t_stream, value in rows:
        print(f"{name:<10} {t_sum * 1e3:>11.1f} ms {t_stream * 1e3:>7.1f} ms"
              f"   {value / N:.9f}")
    if _compiled is not None and t_cy > 0:
        print(f"speedup: {t_fb / t_cy:.1f}x (weighted sum), "
              f"{s_fb / s_cy:.1f}x (stream)")


if __name__ == "__main__":
    main()
