"""Explicit meromorphic continuation of R_x for |x| < 1 (and its dispatch
for general x): admissible K selection, the A~/M~/T~ series, the Q_x
assembly, and a finite-box Abel-Plana validator.

Everything uses the principal branch of the logarithm; the continuation is
branch- and K-independent, which the tests exercise directly.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath as mp

from . import rxcore
from .errors import NaturalBoundary, PoleHit, ZeroInput
from .polyalg import CIRCLE_TOL
from .rxcore import EvalResult

_TWO_PI = 2 * math.pi
_POLE_EPS = 1e-12


@dataclass(frozen=True)
class ContinuationParams:
    """Knobs for the continuation series.

    K must satisfy the admissibility constraint for the given x (both sign
    cases at once); ``for_x`` picks such a K.  ``branch_note`` records that
    the principal logarithm is used for Log z.
    """

    K: float
    tail_tol: float = 1e-10
    max_terms: int = 10 ** 5
    branch_note: str = "principal-log"

    @classmethod
    def for_x(cls, x: complex, tail_tol: float = 1e-10, max_terms: int = 10 ** 5):
        return cls(K=choose_K(x), tail_tol=tail_tol, max_terms=max_terms)


def choose_K(x: complex) -> float:
    """An admissible K for both sign cases at x (0 < |x| < 1).

    If arg x = 0 any K > 0 works (return 1).  Otherwise half the binding
    bound -log|x| / |arg x| is strictly admissible for the constrained sign
    and unconstrained for the other.
    """
    x = complex(x)
    if not 0 < abs(x) < 1:
        raise ValueError("choose_K needs 0 < |x| < 1")
    ax = abs(cmath.phase(x))
    if ax == 0:
        return 1.0
    return 0.5 * (-math.log(abs(x))) / ax


def _cexpm1(u: complex) -> complex:
    """e^u - 1 without cancellation for small |u|."""
    a, b = u.real, u.imag
    return complex(
        math.expm1(a) * math.cos(b) - 2 * math.sin(b / 2) ** 2,
        math.exp(a) * math.sin(b),
    )


def _phi1(u: complex) -> complex:
    """(e^u - 1)/u, stable at u = 0 (the removable-singularity branch)."""
    if abs(u) < 1e-8:
        return 1 + u / 2 + u * u / 6
    return _cexpm1(u) / u


def a_tilde(x: complex, w: complex, params: ContinuationParams | None = None) -> EvalResult:
    """A~(w) = sum_{n>=1} (1/n) e^{n log x - w} / (n log x - w).

    Meromorphic continuation of int_1^inf log(1-x^s) e^{-ws} ds, poles on
    the ray Z_{>=1} log x.
    """
    x, w = complex(x), complex(w)
    if not 0 < abs(x) < 1:
        raise ValueError("a_tilde needs 0 < |x| < 1")
    params = params or ContinuationParams.for_x(x)
    tol = params.tail_tol * 1e-2
    lx = cmath.log(x)
    ax = abs(x)
    emw = cmath.exp(-w)
    total = 0j
    n = 0
    bound = math.inf
    while n < params.max_terms:
        n += 1
        den = n * lx - w
        aden = abs(den)
        if aden < _POLE_EPS:
            raise PoleHit(w, generator=x, exponent=n)
        total += (ax ** n * cmath.exp(1j * n * lx.imag) * emw) / (n * den)
        bound = ax ** (n + 1) * abs(emw) / ((n + 1) * max(aden - abs(lx), 0.1 * aden))
        if bound / (1 - ax) < tol:
            break
    return EvalResult(value=total, tail_bound=bound / (1 - ax), terms_used=n)


def _rational_pair_sum(A: complex, N: int) -> complex:
    """sum_{n>N} [1/(A - 2 pi n) + 1/(A + 2 pi n)], exactly, via
    sum_{n>=1} = (1/2) cot(A/2) - 1/A minus the partial sum."""
    total = 0.5 / cmath.tan(A / 2) - 1 / A
    partial = 0j
    for n in range(1, N + 1):
        partial += 1 / (A - _TWO_PI * n) + 1 / (A + _TWO_PI * n)
    return total - partial


def _m_pair(x: complex, K: float, w: complex, tol: float, max_terms: int):
    """i (M~+ - M~-) at delta = 0, with the harmonic parts paired exactly.

    Returns (value, bound, terms).
    """
    lx = cmath.log(x)
    ax = abs(x)
    emw = cmath.exp(-w)
    total = 0j
    m = 0
    last = 1.0
    while m < max_terms:
        m += 1
        A = 1j * (m * lx - w)
        reA = abs(A.real)
        N = int(reA / _TWO_PI + math.log(1 / tol) / (_TWO_PI * K)) + 4
        Dm = 0j
        for n in range(1, N + 1):
            cp = A - _TWO_PI * n
            cm = -A - _TWO_PI * n
            Dm += K * (_phi1(cp * K) - _phi1(cm * K))
        Dm -= _rational_pair_sum(A, N)
        xm = ax ** m * cmath.exp(1j * m * lx.imag)
        total += xm / m * Dm
        last = abs(Dm) + 1.0
        if ax ** (m + 1) * last / (1 - ax) < tol:
            break
    value = -1j * emw * total
    bound = abs(emw) * ax ** (m + 1) * last / (1 - ax)
    return value, bound, m


def m_tilde(x: complex, sign: int, K: float, w: complex,
            params: ContinuationParams | None = None) -> EvalResult:
    """M~+-_{1,K}(w) at delta = 0, with one caveat the docstring must own:

    the delta = 0 endpoint makes the n-tail of each individual sign harmonic
    (terms -x^m/(m c) with c = +-i m log x -+ i w - 2 pi n), so the raw
    per-sign series diverges logarithmically.  The sign-independent harmonic
    part sum_n 1/(2 pi n) is subtracted here (digamma regularization); the
    combination i(M~+ - M~-), the only one the continuation uses, is exactly
    the paper's value because the subtraction cancels.

    Removable singularities (|c| < 1e-8) take the series branch of
    (e^{cK}-1)/c, whose K-coefficient is the L'Hopital limit.
    """
    x, w = complex(x), complex(w)
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    params = params or ContinuationParams.for_x(x)
    tol = params.tail_tol * 1e-2
    lx = cmath.log(x)
    ax = abs(x)
    emw = cmath.exp(-w)
    total = 0j
    m = 0
    while m < params.max_terms:
        m += 1
        A = 1j * (m * lx - w)
        As = sign * A
        reAs = abs(As.real)
        N = int(reAs / _TWO_PI + math.log(1 / tol) / (_TWO_PI * K)) + 4
        S = 0j
        for n in range(1, N + 1):
            c = As - _TWO_PI * n
            S += K * _phi1(c * K) - 1 / (_TWO_PI * n)
        # regularized tail sum_{n>N} [1/(2 pi n - As) - 1/(2 pi n)], the
        # e^{cK} part being negligible past N; telescoping digamma form
        a_shift = As / _TWO_PI
        with mp.workprec(70):
            tail = (mp.digamma(N + 1) - mp.digamma(N + 1 - a_shift)) / _TWO_PI
        S += complex(tail)
        xm = ax ** m * cmath.exp(1j * m * lx.imag)
        total += xm / m * S
        if ax ** (m + 1) * (abs(S) + 1) / (1 - ax) < tol:
            break
    value = -emw * total
    bound = abs(emw) * ax ** (m + 1) * (abs(total) / max(m, 1) + 1) / (1 - ax)
    return EvalResult(value=value, tail_bound=bound, terms_used=m)


def _sigma(x: complex, w: complex, K: float, sign: int, tol: float, max_terms: int):
    """sum_{m,n>=1} (1/m) e^{(m log x - w + sign 2 pi i n)(1 + sign i K)} /
    (m log x - w + sign 2 pi i n).  Returns (value, bound, terms)."""
    lx = cmath.log(x)
    qn = math.exp(-_TWO_PI * K)
    # per-m geometric ratio: e^{log|x| - sign*K*arg x}
    qm = math.exp(lx.real - sign * K * lx.imag)
    total = 0j
    terms = 0
    m = 0
    first_bound_next = math.inf
    while m < max_terms:
        m += 1
        base = m * lx - w
        first_bound = None
        n = 0
        while n < max_terms:
            n += 1
            c = base + sign * _TWO_PI * 1j * n
            if abs(c) < _POLE_EPS:
                raise PoleHit(w, generator=x, exponent=m)
            # |e^{c(1 + sign iK)}| = e^{Re c - sign K Im c}
            mag = math.exp(c.real - sign * K * c.imag)
            term = cmath.exp(c * (1 + sign * 1j * K)) / (m * c)
            total += term
            terms += 1
            bnd = mag / (m * abs(c))
            if first_bound is None:
                first_bound = bnd
            if bnd * qn / (1 - qn) < tol:
                break
        first_bound_next = (first_bound or 0) * qm
        if first_bound_next / ((1 - qm) * (1 - qn)) < tol:
            break
    bound = first_bound_next / max((1 - qm) * (1 - qn), 1e-12)
    return total, bound, terms


def t_tilde(x: complex, sign: int, K: float, w: complex,
            params: ContinuationParams | None = None) -> EvalResult:
    """T~+-_K(w) = +- sum_{m,n} (1/m) e^{(m log x - w +- 2 pi i n)(1 +- iK)}
    / (m log x - w +- 2 pi i n); poles at Z_{>=1} log x -+ ... the shifted
    lattice Z_{>=1} log x + sign * 2 pi i Z_{>=1}."""
    x, w = complex(x), complex(w)
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    params = params or ContinuationParams.for_x(x)
    value, bound, terms = _sigma(x, w, K, sign, params.tail_tol * 1e-2, params.max_terms)
    return EvalResult(value=sign * value, tail_bound=bound, terms_used=terms)


def _pole_distance(x: complex, w: complex) -> tuple[float, int]:
    """Distance from w to the pole lattice Z_{>=1} log x + 2 pi i Z, and the
    generating exponent n of the nearest lattice point."""
    lx = cmath.log(x)
    best = math.inf
    best_n = 0
    n_star = w.real / lx.real if lx.real != 0 else 1.0
    for n in range(max(1, int(n_star) - 2), max(1, int(n_star) + 3)):
        im_residual = w.imag - n * lx.imag
        k = round(im_residual / _TWO_PI)
        d = abs(complex(w.real - n * lx.real, im_residual - _TWO_PI * k))
        if d < best:
            best, best_n = d, n
    return best, best_n


def q_continuation(x: complex, w: complex,
                   params: ContinuationParams | None = None) -> EvalResult:
    """The meromorphic continuation of Q_x(w) = sum_{n>=1} log(1-x^n) e^{-wn}.

    Assembly (validated against the direct series in the right half-plane):

        Q = (1/2) log(1-x) e^{-w} + A~ + i(M~+ - M~-) + Sigma+ + Sigma-

    where Sigma+- are the horizontal-edge double sums.  Poles at
    Z_{>=1} log x + 2 pi i Z.
    """
    x, w = complex(x), complex(w)
    if not 0 < abs(x) < 1:
        raise ValueError("q_continuation needs 0 < |x| < 1")
    params = params or ContinuationParams.for_x(x)
    dist, n_near = _pole_distance(x, w)
    if dist < _POLE_EPS:
        raise PoleHit(w, generator=x, exponent=n_near)
    tol = params.tail_tol * 1e-2
    head = 0.5 * cmath.log(1 - x) * cmath.exp(-w)
    at = a_tilde(x, w, params)
    mp_val, mp_bound, _ = _m_pair(x, params.K, w, tol, params.max_terms)
    sp, sp_bound, t1 = _sigma(x, w, params.K, +1, tol, params.max_terms)
    sm, sm_bound, t2 = _sigma(x, w, params.K, -1, tol, params.max_terms)
    value = head + at.value + mp_val + sp + sm
    bound = at.tail_bound + mp_bound + sp_bound + sm_bound
    return EvalResult(value=value, tail_bound=bound,
                      terms_used=at.terms_used + t1 + t2)


def rx_continued(x: complex, z: complex,
                 params: ContinuationParams | None = None,
                 exact_order: tuple[int, int] | None = None) -> EvalResult:
    """The meromorphic continuation of R_x(z), dispatching on x:

      * x a root of unity (pass ``exact_order=(m, k)`` for x = zeta_m^k):
        the exact rational form;
      * |x| > 1: inversion, R_x = R_{1/x} + log|x| z/(z-1)^2;
      * |x| < 1: R_x(z) = (1/2)(q~_x(z) + q~_conj(x)(z)) with
        q~_x(z) = Q_x(-Log z), principal branch (the value is branch- and
        K-independent).

    Unimodular x that is not a declared root of unity has no continuation
    (natural boundary) and raises NaturalBoundary.
    """
    z = complex(z)
    x = complex(x)
    if x == 0:
        raise ZeroInput("R_x undefined for x = 0")
    if exact_order is not None:
        m, k = exact_order
        return rxcore.rx_root_of_unity(m, k, z)
    ax = abs(x)
    if abs(ax - 1) < CIRCLE_TOL:
        raise NaturalBoundary([x])
    if ax > 1:
        if abs(z - 1) < _POLE_EPS:
            raise PoleHit(1.0 + 0j, generator=x, exponent=0)
        xinv, weight = rxcore.rx_invert_decompose(x)
        inner = rx_continued(xinv, z, params)
        extra = weight * z / (z - 1) ** 2
        return EvalResult(inner.value + extra, inner.tail_bound, inner.terms_used)
    if z == 0:
        return EvalResult(0j, 0.0, 0)
    params = params or ContinuationParams.for_x(x)
    w = -cmath.log(z)
    # pole set in z: x^{-n}, conj(x)^{-n}
    for xx in (x, x.conjugate()):
        d, n_near = _pole_distance(xx, w)
        if d < _POLE_EPS:
            raise PoleHit(xx ** (-n_near), generator=xx, exponent=-n_near)
    q1 = q_continuation(x, w, params)
    if x.imag == 0:
        return EvalResult(q1.value, q1.tail_bound, q1.terms_used)
    q2 = q_continuation(x.conjugate(), w, params)
    return EvalResult(0.5 * (q1.value + q2.value),
                      0.5 * (q1.tail_bound + q2.tail_bound),
                      q1.terms_used + q2.terms_used)


def abel_plana_check(x: complex, w: complex, a: int, b: int, K: float) -> float:
    """Residual |LHS - RHS| of the finite-box Abel-Plana identity for
    h(s) = log(1 - x^s) e^{-ws} on [a, b] x i[-K, K] (adaptive tanh-sinh
    quadrature on every integral).  Admissible K keeps h holomorphic on an
    open neighbourhood of the box."""
    if not (isinstance(a, int) and isinstance(b, int) and 1 <= a < b):
        raise ValueError("need integers 1 <= a < b")
    with mp.workprec(200):
        xm = mp.mpc(x)
        wm = mp.mpc(w)
        lx = mp.log(xm)

        def h(s):
            return mp.log(1 - mp.exp(s * lx)) * mp.exp(-wm * s)

        lhs = mp.fsum(h(n) for n in range(a, b + 1))
        rhs = (h(a) + h(b)) / 2
        rhs += mp.quad(h, [a, b])
        rhs += 1j * mp.quad(
            lambda y: (h(a + 1j * y) - h(a - 1j * y)) / (mp.e ** (2 * mp.pi * y) - 1),
            [0, K],
        )
        rhs -= 1j * mp.quad(
            lambda y: (h(b + 1j * y) - h(b - 1j * y)) / (mp.e ** (2 * mp.pi * y) - 1),
            [0, K],
        )
        rhs -= mp.quad(
            lambda t: h(t + 1j * K) / (1 - mp.exp(-2j * mp.pi * (t + 1j * K))), [a, b]
        )
        rhs += mp.quad(
            lambda t: h(t - 1j * K) / (mp.exp(2j * mp.pi * (t - 1j * K)) - 1), [a, b]
        )
        return float(abs(lhs - rhs))
