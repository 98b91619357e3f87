"""The building-block series R_x(z) = sum' log|1 - x^r| z^r.

Direct power-series evaluation with certified tails, the exact rational form
when x is a root of unity, the |x| > 1 inversion, the partition-function
constant log|F(x)|, and the expansion coefficients at z = 1.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import PoleHit, ZeroInput

_NUMERIC_ONE_TOL = 1e-13


@dataclass(frozen=True)
class EvalResult:
    """A truncated-series value with a certified truncation-error bound."""

    value: complex
    tail_bound: float
    terms_used: int


@dataclass(frozen=True)
class RationalFormRx:
    """R_x for x a primitive m-th root of unity:
    sum_{l=1}^{m-1} numerator_coeffs[l-1] * z^l / (1 - z^m)."""

    order: int
    numerator_coeffs: tuple  # log|1 - x^l| for l = 1..m-1
    denominator: str = "1 - z^m"

    def poles(self):
        """All m-th roots of unity (each simple) unless the form is zero."""
        if self.order == 1:
            return []
        return [cmath.exp(2j * math.pi * k / self.order) for k in range(self.order)]


def _unimodular_growth_constant(terms):
    """Empirical C with |log|1-x^r|| <= C log(r+1) over the computed prefix.

    The logarithmic growth is the assumption the tail bound rests on for
    unimodular x (Gelfond-type); C is measured, not proven.
    """
    C = 1.0
    for r, a in terms:
        C = max(C, abs(a) / math.log(r + 1))
    return C


def rx_series(x: complex, z: complex, N: int, exact_order: int | None = None) -> EvalResult:
    """Partial sum of R_x at z through r = N, with the prime rule.

    The r-th summand is skipped when x^r = 1; that is decided exactly when
    ``exact_order`` (the primitive order of x) is supplied, else numerically
    via |x^r - 1| < 1e-13 (numeric x never triggers the exact skip).

    The tail bound is only meaningful for |z| < 1: geometric 2|x|^r for
    |x| < 1, (1 + r log|x|)|z|^r for |x| > 1, and C log r growth (C measured
    on the prefix) for unimodular x.
    """
    x = complex(x)
    z = complex(z)
    if x == 0:
        raise ZeroInput("R_x undefined for x = 0")
    ax = abs(x)
    az = abs(z)
    la = math.log(ax)
    logx = cmath.log(x)
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    xr = 1.0 + 0.0j
    zr = 1.0 + 0.0j
    kept = []
    used = 0
    for r in range(1, N + 1):
        xr *= x
        zr *= z
        if abs(ax - 1) < 1e-12 and r % 64 == 0:
            xr /= abs(xr)  # keep the unimodular orbit on the circle
        if ax > 1:
            # log|1 - x^r| = r log|x| + log|x^{-r} - 1|, overflow-free;
            # |x^r - 1| >= |x|^r - 1 > 1e-13 here, so the skip never fires
            xmr = cmath.exp(-r * logx)
            skip_val = math.inf
            a = r * la + math.log(abs(xmr - 1))
        else:
            skip_val = abs(xr - 1)
            a = None
        if exact_order is not None:
            skip = r % exact_order == 0
        else:
            skip = skip_val < _NUMERIC_ONE_TOL
        if skip:
            continue
        if a is None:
            a = math.log(abs(1 - xr))
        term = a * zr
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        used += 1
        if abs(a) > 0:
            kept.append((r, a))
    if az >= 1:
        tail = math.inf
    elif ax < 1:
        q = ax * az
        tail = 2 * q ** (N + 1) / (1 - q) if q < 1 else math.inf
    elif ax > 1:
        # |log|1-x^r|| < 1 + r log|x| for large r
        la = math.log(ax)
        s1 = az ** (N + 1) / (1 - az)
        s2 = az ** (N + 1) * ((N + 1) - N * az) / (1 - az) ** 2
        tail = s1 + la * s2
    else:
        C = _unimodular_growth_constant(kept)
        tail = C * (
            math.log(N + 2) * az ** (N + 1) / (1 - az)
            + az ** (N + 1) / ((N + 2) * (1 - az) ** 2)
        )
    return EvalResult(value=total, tail_bound=tail, terms_used=used)


def rational_form(m: int, k: int = 1) -> RationalFormRx:
    """The exact rational form of R_x for x = e^{2 pi i k/m} primitive."""
    if m < 1:
        raise ValueError("order must be positive")
    if math.gcd(k, m) != 1:
        raise ValueError(f"x = zeta_{m}^{k} is not primitive of order {m}")
    coeffs = []
    for l in range(1, m):
        coeffs.append(math.log(abs(1 - cmath.exp(2j * math.pi * k * l / m))))
    return RationalFormRx(order=m, numerator_coeffs=tuple(coeffs))


def rx_root_of_unity(m: int, k: int, z: complex) -> EvalResult:
    """Evaluate R_x exactly (as a rational function) for x = e^{2 pi i k/m}.

    Raises PoleHit at points with z^m = 1 (the full finite pole set).
    """
    form = rational_form(m, k)
    z = complex(z)
    if m == 1:
        return EvalResult(value=0j, tail_bound=0.0, terms_used=0)
    zm = z ** m
    if abs(zm - 1) < 1e-12:
        angle = cmath.phase(z) / (2 * math.pi) * m
        nearest = cmath.exp(2j * math.pi * round(angle) / m)
        raise PoleHit(nearest, generator=cmath.exp(2j * math.pi * k / m))
    num = 0j
    zl = 1.0 + 0j
    for c in form.numerator_coeffs:
        zl *= z
        num += c * zl
    return EvalResult(value=num / (1 - zm), tail_bound=0.0, terms_used=m - 1)


def rx_laurent_at_one_rootofunity(m: int, k: int = 1):
    """(residue, constant) of R_x at z = 1 for x = e^{2 pi i k/m}, m >= 2:

        residue  = (1/m) log(1/m)
        constant = -((m-1)/(2m)) log(1/m) - (1/m) sum_{l=1}^{m-1} l log|1 - x^l|
    """
    if m < 2:
        raise ValueError("the m = 1 form is the zero function; no pole at z = 1")
    if math.gcd(k, m) != 1:
        raise ValueError("k must be coprime to m")
    log_inv_m = math.log(1.0 / m)
    residue = log_inv_m / m
    s = 0.0
    for l in range(1, m):
        s += l * math.log(abs(1 - cmath.exp(2j * math.pi * k * l / m)))
    constant = -((m - 1) / 2.0) * (log_inv_m / m) - s / m
    return residue, constant


def rx_invert_decompose(x: complex):
    """For |x| > 1: R_x(z) = R_{1/x}(z) + log|x| * z/(z-1)^2.

    Returns (1/x, log|x|)."""
    x = complex(x)
    if abs(x) <= 1:
        raise ValueError("inversion decomposition needs |x| > 1")
    return 1 / x, math.log(abs(x))


def log_abs_F(x: complex, tol: float = 1e-14) -> float:
    """log|F(x)| for the partition generating function F(z) = prod (1-z^n)^{-1}.

    log|F(x)| = -sum_{n>=1} log|1 - x^n|; needs |x| < 1.  Truncated when the
    geometric bound 2|x|^n/(1-|x|) drops below tol.
    """
    x = complex(x)
    ax = abs(x)
    if ax >= 1:
        raise ValueError("log|F| needs |x| < 1")
    if x == 0:
        return 0.0
    total = 0.0
    xn = 1.0 + 0j
    n = 0
    while True:
        n += 1
        xn *= x
        total -= math.log(abs(1 - xn))
        if 2 * ax ** (n + 1) / (1 - ax) < tol:
            break
        if n > 10 ** 6:
            break
    return total


def rx_expansion_at_one(x: complex, L: int, tol: float = 1e-13):
    """Coefficients c_0..c_L of R_x(z) = sum_l c_l (z-1)^l around z = 1, |x| < 1:

        c_0     = -log|F(x)|
        c_{l+1} = sum_{r>=1} log|x^r - 1| * binom(r, l+1)

    All coefficients are real.  Binomials are accumulated in floating point
    with compensated summation; binom(r, l+1) grows polynomially against the
    geometric |x|^r decay, so doubles suffice for small L.
    """
    x = complex(x)
    ax = abs(x)
    if ax >= 1:
        raise ValueError("expansion at z=1 needs |x| < 1")
    coeffs = [-log_abs_F(x)]
    for ell in range(L):
        kk = ell + 1
        total = 0.0
        comp = 0.0
        binom = 1.0  # binom(kk, kk)
        xr = x ** kk
        r = kk
        while True:
            if r > kk:
                binom *= r / (r - kk)  # binom(r, kk) from binom(r-1, kk)... see below
            a = math.log(abs(xr - 1)) * binom
            y = a - comp
            t = total + y
            comp = (t - total) - y
            total = t
            # rigorous tail: ratio binom(r+1,kk)/binom(r,kk) = (r+1)/(r+1-kk)
            ratio = ax * (r + 2) / (r + 2 - kk)
            if ratio < 1:
                bound = 2 * (ax ** (r + 1)) * binom * ((r + 1) / (r + 1 - kk)) / (1 - ratio)
                if bound < tol:
                    break
            r += 1
            xr *= x
            if r > 10 ** 6:
                break
        coeffs.append(total)
    return coeffs
