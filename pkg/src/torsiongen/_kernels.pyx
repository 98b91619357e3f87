# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loops: fixed-point orbit stepping for the ergodic averages
and coefficient streams.

Angles are 128-bit fixed-point fractions (two uint64 limbs), so frac(n*theta)
is exact modular arithmetic and results are bitwise reproducible.  Sums use
Kahan compensation.
"""
from libc.math cimport log, sin, cos, M_PI

import numpy as np

DEF TWO64 = 18446744073709551616.0


cdef inline double _to_unit(unsigned long long hi, unsigned long long lo) nogil:
    return (hi + lo / TWO64) / TWO64


cdef inline double _folded_sin_arg(unsigned long long hi, unsigned long long lo) nogil:
    """t in (0, 1) from limbs, folded to (0, 1/2] exactly in fixed point."""
    cdef unsigned long long nhi, nlo
    if hi >= 0x8000000000000000ULL:
        nlo = (~lo) + 1
        nhi = (~hi) + (1 if nlo == 0 else 0)
        return _to_unit(nhi, nlo)
    return _to_unit(hi, lo)


def ergodic_weighted_sum(unsigned long long a_hi, unsigned long long a_lo,
                         unsigned long long b_hi, unsigned long long b_lo,
                         long long N):
    """(sum_{n=1}^{N} log(2 sin(pi frac(n a))) e^{2 pi i frac(n b)}, skipped).

    Terms with frac(n a) == 0 exactly are skipped (the prime rule; impossible
    for irrational angles).
    """
    cdef unsigned long long s_hi = 0, s_lo = 0, u_hi = 0, u_lo = 0, old
    cdef double t, u, w, arg
    cdef double re_sum = 0, im_sum = 0, re_c = 0, im_c = 0, y, tmp, term
    cdef long long n, skipped = 0
    for n in range(1, N + 1):
        old = s_lo
        s_lo = s_lo + a_lo
        s_hi = s_hi + a_hi + (1 if s_lo < old else 0)
        old = u_lo
        u_lo = u_lo + b_lo
        u_hi = u_hi + b_hi + (1 if u_lo < old else 0)
        if s_hi == 0 and s_lo == 0:
            skipped += 1
            continue
        t = _folded_sin_arg(s_hi, s_lo)
        w = log(2.0 * sin(M_PI * t))
        u = _to_unit(u_hi, u_lo)
        arg = 2.0 * M_PI * u
        term = w * cos(arg)
        y = term - re_c
        tmp = re_sum + y
        re_c = (tmp - re_sum) - y
        re_sum = tmp
        term = w * sin(arg)
        y = term - im_c
        tmp = im_sum + y
        im_c = (tmp - im_sum) - y
        im_sum = tmp
    return complex(re_sum, im_sum), skipped


def orbit_stream(unsigned long long a_hi, unsigned long long a_lo,
                 unsigned long long s_hi, unsigned long long s_lo,
                 long long count):
    """Array of frac(n a) in [0, 1) for ``count`` steps from the supplied
    running state."""
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] view = out
    cdef unsigned long long old
    cdef long long i
    for i in range(count):
        old = s_lo
        s_lo = s_lo + a_lo
        s_hi = s_hi + a_hi + (1 if s_lo < old else 0)
        view[i] = _to_unit(s_hi, s_lo)
    return out


def log_sin_stream(unsigned long long a_hi, unsigned long long a_lo,
                   unsigned long long s_hi, unsigned long long s_lo,
                   long long count):
    """Array of log(2 sin(pi frac(n a))) for ``count`` steps, starting from
    the supplied running state (the fixed-point value of the previous index).
    Entries where the orbit hits 0 exactly are emitted as 0.0."""
    out = np.empty(count, dtype=np.float64)
    cdef double[::1] view = out
    cdef unsigned long long old
    cdef double t
    cdef long long i
    for i in range(count):
        old = s_lo
        s_lo = s_lo + a_lo
        s_hi = s_hi + a_hi + (1 if s_lo < old else 0)
        if s_hi == 0 and s_lo == 0:
            view[i] = 0.0
            continue
        t = _folded_sin_arg(s_hi, s_lo)
        view[i] = log(2.0 * sin(M_PI * t))
    return out
