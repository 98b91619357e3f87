"""Pure-Python fallback for the compiled kernels.

Same fixed-point semantics as ``_kernels.pyx`` (exact 128-bit phase
arithmetic via Python integers); term evaluation is chunked through numpy
and chunk totals are combined with math.fsum, so results are deterministic
for a fixed chunk size.
"""
import math

import numpy as np

_MASK = (1 << 128) - 1
_HALF = 1 << 127
_SCALE = float(1 << 128)
_CHUNK = 1 << 15


def _split(x):
    return (x >> 64) & 0xFFFFFFFFFFFFFFFF, x & 0xFFFFFFFFFFFFFFFF


def ergodic_weighted_sum(a_hi, a_lo, b_hi, b_lo, N):
    """See _kernels.ergodic_weighted_sum."""
    a = (int(a_hi) << 64) | int(a_lo)
    b = (int(b_hi) << 64) | int(b_lo)
    s = 0
    u = 0
    skipped = 0
    re_parts = []
    im_parts = []
    t_buf = np.empty(_CHUNK)
    u_buf = np.empty(_CHUNK)
    fill = 0
    for _ in range(N):
        s = (s + a) & _MASK
        u = (u + b) & _MASK
        if s == 0:
            skipped += 1
            continue
        t_buf[fill] = ((1 << 128) - s) / _SCALE if s >= _HALF else s / _SCALE
        u_buf[fill] = u / _SCALE
        fill += 1
        if fill == _CHUNK:
            w = np.log(2.0 * np.sin(np.pi * t_buf))
            arg = 2.0 * np.pi * u_buf
            re_parts.append(float(np.sum(w * np.cos(arg))))
            im_parts.append(float(np.sum(w * np.sin(arg))))
            fill = 0
    if fill:
        w = np.log(2.0 * np.sin(np.pi * t_buf[:fill]))
        arg = 2.0 * np.pi * u_buf[:fill]
        re_parts.append(float(np.sum(w * np.cos(arg))))
        im_parts.append(float(np.sum(w * np.sin(arg))))
    return complex(math.fsum(re_parts), math.fsum(im_parts)), skipped


def orbit_stream(a_hi, a_lo, s_hi, s_lo, count):
    """See _kernels.orbit_stream."""
    a = (int(a_hi) << 64) | int(a_lo)
    s = (int(s_hi) << 64) | int(s_lo)
    out = np.empty(count)
    for i in range(count):
        s = (s + a) & _MASK
        out[i] = s / _SCALE
    return out


def log_sin_stream(a_hi, a_lo, s_hi, s_lo, count):
    """See _kernels.log_sin_stream."""
    a = (int(a_hi) << 64) | int(a_lo)
    s = (int(s_hi) << 64) | int(s_lo)
    t = np.empty(count)
    zero_idx = []
    for i in range(count):
        s = (s + a) & _MASK
        if s == 0:
            zero_idx.append(i)
            t[i] = 0.25  # placeholder, overwritten below
            continue
        t[i] = ((1 << 128) - s) / _SCALE if s >= _HALF else s / _SCALE
    out = np.log(2.0 * np.sin(np.pi * t))
    for i in zero_idx:
        out[i] = 0.0
    return out
