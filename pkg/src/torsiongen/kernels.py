"""Kernel dispatch: compiled extension if available, pure Python otherwise.

Set TORSIONGEN_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that compare the two backends).
"""
import os

import mpmath as mp

if os.environ.get("TORSIONGEN_PURE_PYTHON"):
    from . import _fallback as _impl

    BACKEND = "fallback"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _fallback as _impl

        BACKEND = "fallback"

_MASK64 = 0xFFFFFFFFFFFFFFFF


def fixed_point_angle(theta) -> int:
    """theta mod 1 as a 128-bit fixed-point integer.

    Accepts float, Fraction, or mpmath values; mpmath inputs are consumed at
    their own precision, so a 128-bit-polished angle keeps frac(n*theta)
    faithful out to n ~ 1e6 and far beyond.
    """
    from fractions import Fraction

    with mp.workprec(192):
        if isinstance(theta, Fraction):
            t = mp.mpf(theta.numerator) / theta.denominator
        elif isinstance(theta, (mp.mpf, mp.mpc)):
            t = +mp.mpf(theta.real if isinstance(theta, mp.mpc) else theta)
        else:
            t = mp.mpf(theta)
        frac = t - mp.floor(t)
        return int(mp.floor(frac * mp.power(2, 128))) & ((1 << 128) - 1)


def _limbs(fp: int):
    return (fp >> 64) & _MASK64, fp & _MASK64


def ergodic_weighted_sum(theta_fp: int, phase_fp: int, N: int):
    """Kahan-compensated sum_{n=1}^N log(2 sin(pi frac(n theta))) e^{2 pi i frac(n phi)}.

    Returns (sum, skipped); skipped counts prime-rule omissions
    (frac(n theta) == 0 exactly).
    """
    a_hi, a_lo = _limbs(theta_fp)
    b_hi, b_lo = _limbs(phase_fp)
    return _impl.ergodic_weighted_sum(a_hi, a_lo, b_hi, b_lo, N)


def log_sin_stream(theta_fp: int, n0: int, count: int):
    """Array of log|1 - e^{2 pi i n theta}| = log(2 sin(pi frac(n theta)))
    for n = n0 .. n0+count-1 (prime-rule entries emitted as 0.0)."""
    state = ((n0 - 1) * theta_fp) & ((1 << 128) - 1)
    a_hi, a_lo = _limbs(theta_fp)
    s_hi, s_lo = _limbs(state)
    return _impl.log_sin_stream(a_hi, a_lo, s_hi, s_lo, count)


def orbit_stream(theta_fp: int, n0: int, count: int):
    """Array of frac(n theta) for n = n0 .. n0+count-1."""
    state = ((n0 - 1) * theta_fp) & ((1 << 128) - 1)
    a_hi, a_lo = _limbs(theta_fp)
    s_hi, s_lo = _limbs(state)
    return _impl.orbit_stream(a_hi, a_lo, s_hi, s_lo, count)
