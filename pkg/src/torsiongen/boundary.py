"""Diophantine-root regime: ergodic time averages over irrational rotations,
the closed-form integrals P_m and W_m, fractional-exponent values via S_m
and digamma, radial-limit estimation at the natural boundary, and
multiplicative-dependence detection.

Convergence-rate tolerances for the averages are empirical configuration
knobs: the underlying theorems prove convergence with no rate.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

from . import kernels, lvalues
from .errors import InvalidExponent
from .polyalg import IntPoly, roots

_TWO_PI = 2 * math.pi


# ----------------------------------------------------------------------------
# Angle extraction
# ----------------------------------------------------------------------------

def poly_root_angles(poly: IntPoly, prec_bits: int = 160):
    """Angles arg(root)/2pi (mod 1) of all roots, polished at high precision.

    Returned as mpmath mpf values, sorted deterministically by
    (|root|, angle); multiplicities are expanded.
    """
    with mp.workprec(prec_bits):
        rts = roots(poly, as_mpc=True)
        entries = []
        for z, mult in rts:
            zc = mp.mpc(z)
            if zc == 0:
                continue
            ang = mp.arg(zc) / (2 * mp.pi)
            ang = ang - mp.floor(ang)
            for _ in range(mult):
                entries.append((abs(zc), ang))
        entries.sort(key=lambda t: (float(t[0]), float(t[1])))
        return [a for _, a in entries]


def parse_theta_spec(spec, prec_bits: int = 160):
    """An angle in (0,1) from a flexible spec:

      * a number (float / Fraction / mpf) taken mod 1;
      * "root:<coeffs>:<i>"      angle of the i-th root (sorted by modulus
                                 then angle, 0-based), extracted at high
                                 precision;
      * "pair:<coeffs>:<i>:<j>"  angle of root_i / root_j (the quotient of
                                 two same-modulus roots walks the unit
                                 circle).
    """
    if not isinstance(spec, str):
        with mp.workprec(prec_bits):
            t = mp.mpf(spec) if not isinstance(spec, Fraction) else (
                mp.mpf(spec.numerator) / spec.denominator
            )
            return t - mp.floor(t)
    spec = spec.strip()
    if spec.startswith("root:") or spec.startswith("pair:"):
        parts = spec.split(":")
        poly = IntPoly.parse(parts[1])
        with mp.workprec(prec_bits):
            angles = poly_root_angles(poly, prec_bits)
            if parts[0] == "root":
                theta = angles[int(parts[2])]
            else:
                i, j = int(parts[2]), int(parts[3])
                theta = angles[i] - angles[j]
            theta = theta - mp.floor(theta)
            return theta
    with mp.workprec(prec_bits):
        return mp.mpf(spec) % 1


# ----------------------------------------------------------------------------
# Ergodic averages
# ----------------------------------------------------------------------------

@dataclass
class AverageSpec:
    """Parameters of (1/N) sum log|1 - e^{2 pi i n theta}| e^{2 pi i m n theta'}
    with m = m_num/m_den in lowest terms; theta' is theta unless ``alpha``
    supplies an independent direction.

    ``frac_weight`` switches the weight to e^{2 pi i m {n theta'}} (the
    fractional part in the exponent); for fractional m the two differ, and
    only the fractional-part convention has the nonzero limit C_m = W_m
    (the literal-product average of fractional twists tends to 0 because
    the residue classes of floor(n theta') average out)."""

    theta: object
    m_num: int = 0
    m_den: int = 1
    N: int = 10 ** 6
    alpha: object = None
    frac_weight: bool = False

    def __post_init__(self):
        if self.m_den < 1 or math.gcd(abs(self.m_num), self.m_den) != 1:
            raise ValueError("m must be in lowest terms with positive denominator")
        if self.N < 1:
            raise ValueError("N >= 1")


def ergodic_average(spec: AverageSpec) -> complex:
    """Birkhoff-type average; converges to -1/(2|m|) (0 for m = 0) for
    integer m when theta' = theta, by orthogonality.  theta is assumed
    irrational (terms with frac(n theta) = 0 exactly are skipped; this
    cannot happen for irrational theta).

    The exponential e^{2 pi i m n theta} is computed as exp of the product
    m*n*theta (never as a power of a power)."""
    direction = spec.theta if spec.alpha is None else spec.alpha
    with mp.workprec(192):
        theta = parse_theta_spec(spec.theta) if isinstance(spec.theta, str) else mp.mpf(spec.theta)
        dtheta = parse_theta_spec(direction) if isinstance(direction, str) else mp.mpf(direction)
        a_fp = kernels.fixed_point_angle(theta)
        if not spec.frac_weight:
            mtheta = (mp.mpf(spec.m_num) / spec.m_den) * dtheta
            b_fp = kernels.fixed_point_angle(mtheta)
        else:
            b_fp = kernels.fixed_point_angle(dtheta)
    if not spec.frac_weight:
        total, _ = kernels.ergodic_weighted_sum(a_fp, b_fp, spec.N)
        return total / spec.N
    # fractional-part weight: chunked streams, weight exp(2 pi i m frac(n theta'))
    mf = spec.m_num / spec.m_den
    chunk = 1 << 15
    parts = []
    n0 = 1
    while n0 <= spec.N:
        cnt = min(chunk, spec.N - n0 + 1)
        a = kernels.log_sin_stream(a_fp, n0, cnt)
        t = kernels.orbit_stream(b_fp, n0, cnt)
        w = np.exp(2j * np.pi * np.mod(mf * t, 1.0))
        parts.append(complex(np.sum(a * w)))
        n0 += cnt
    return sum(parts) / spec.N


def ergodic_average_2d(theta, alpha, m: int, N: int) -> complex:
    """(1/N) sum log|1 - e^{2 pi i n theta}| e^{2 pi i m n alpha}; tends to 0
    when 1, theta, alpha are rationally independent."""
    return ergodic_average(AverageSpec(theta=theta, m_num=m, m_den=1, N=N, alpha=alpha))


# ----------------------------------------------------------------------------
# Closed-form integrals and quadrature oracles
# ----------------------------------------------------------------------------

def p_integral(m: int) -> float:
    """P_m = int_0^pi log(sin t) e^{2imt} dt: -pi log 2 at m = 0, else
    -pi/(2|m|) (real; P_{-m} = conj(P_m))."""
    if m == 0:
        return -math.pi * math.log(2)
    return -math.pi / (2 * abs(m))


def p_quadrature(m: int, prec_dps: int = 20) -> complex:
    """Adaptive tanh-sinh quadrature oracle for P_m (handles the endpoint
    log singularities by node placement)."""
    with mp.workdps(prec_dps):
        val = mp.quad(
            lambda t: mp.log(mp.sin(t)) * mp.exp(2j * m * t),
            [0, mp.pi / 2, mp.pi],
        )
        return complex(val)


def w_integral(m: int) -> float:
    """W_m = int_0^1 log|1 - e^{2 pi i t}| e^{2 pi i m t} dt
    = -(1/(2|m|)) for m != 0, and 0 at m = 0."""
    if m == 0:
        return 0.0
    return -1.0 / (2 * abs(m))


def w_quadrature(m, prec_dps: int = 20) -> complex:
    """Quadrature oracle for W_m over [0,1] using
    log|1 - e^{2 pi i t}| = log(2 sin(pi t)); accepts fractional m."""
    mf = float(m)
    with mp.workdps(prec_dps):
        val = mp.quad(
            lambda t: mp.log(2 * mp.sin(mp.pi * t)) * mp.exp(2j * mp.pi * mf * t),
            [0, mp.mpf(1) / 2, 1],
        )
        return complex(val)


# ----------------------------------------------------------------------------
# S_m and fractional W_m
# ----------------------------------------------------------------------------

@dataclass
class SmValue:
    m: Fraction
    at_one: complex
    at_minus_one: complex


def _alternating_sum(terms):
    """Euler-accelerated alternating sum sum (-1)^r terms[r-1] (r >= 1) by
    iterated averaging of partial sums."""
    partial = []
    s = 0.0
    for r, c in enumerate(terms, start=1):
        s += (-1) ** r * c
        partial.append(s)
    row = partial[-40:] if len(partial) > 40 else partial
    while len(row) > 1:
        row = [(a + b) / 2 for a, b in zip(row, row[1:])]
    return row[0]


def s_m(m) -> SmValue:
    """S_m(1) = sum 1/(r(r+m)) and S_m(-1) = sum (1/r) e^{i pi (r+m)}/(r+m).

    at_one goes through the digamma identity S_m(1) = ((psi(m)+gamma)+1/m)/m
    (psi by recurrence to (0,1] plus a compensated series with integral
    tail), cross-checked internally against raw partial sums; at_minus_one
    uses Euler acceleration on the alternating series.  m in Z_{<=0} is
    rejected."""
    m = Fraction(m)
    if m.denominator == 1 and m < 0:
        raise InvalidExponent(f"S_m undefined for m = {m}")
    mf = float(m)
    if m == 0:
        # S_0(1) = zeta(2), S_0(-1) = -pi^2/12, via plain series + tail
        N = 200000
        r = np.arange(1, N + 1, dtype=np.float64)
        at_one = float(np.sum(1.0 / (r * r))) + 1.0 / (N + 0.5)
        terms = [1.0 / (r * r) for r in range(1, 100)]
        at_minus_one = _alternating_sum(terms)
        return SmValue(m, complex(at_one), complex(at_minus_one))
    # digamma path
    psi_plus_gamma = lvalues.digamma_rational(m.numerator, m.denominator)
    at_one = (psi_plus_gamma + 1.0 / mf) / mf
    # raw-series cross-check
    N = 200000
    r = np.arange(1, N + 1, dtype=np.float64)
    raw = float(np.sum(1.0 / (r * (r + mf)))) + math.log1p(mf / (N + 0.5)) / mf
    if abs(raw - at_one) > 1e-6 * max(1.0, abs(at_one)):
        raise ArithmeticError(f"S_m(1) digamma/raw mismatch: {at_one} vs {raw}")
    # S_m(-1) = e^{i pi m} sum_r (-1)^r / (r (r+m))
    terms = [1.0 / (r * (r + mf)) for r in range(1, 200)]
    alt = _alternating_sum(terms)
    at_minus_one = cmath.exp(1j * math.pi * mf) * alt
    return SmValue(m, complex(at_one), at_minus_one)


def w_fractional(m) -> complex:
    """W_m for fractional m = u/v (v >= 2), assembled from the two
    half-period integrals:

        i I_1 = S_m(1) - S_m(-1) - (1/(2 m^2)) (1 - e^{i pi m} + m pi i)
        i I_2 = -e^{2 pi i m} conj(i I_1)
        W_m  = (I_1 + I_2) / (2 pi)

    Integer m delegates to the closed form w_integral."""
    m = Fraction(m)
    if m.denominator == 1:
        return complex(w_integral(int(m)))
    mf = float(m)
    sm = s_m(m)
    i_i1 = sm.at_one - sm.at_minus_one - (1.0 / (2 * mf * mf)) * (
        1 - cmath.exp(1j * math.pi * mf) + mf * math.pi * 1j
    )
    i1 = i_i1 / 1j
    i_i2 = -cmath.exp(2j * math.pi * mf) * i_i1.conjugate()
    i2 = i_i2 / 1j
    return (i1 + i2) / _TWO_PI


# ----------------------------------------------------------------------------
# Radial-limit estimation
# ----------------------------------------------------------------------------

@dataclass
class RadialLimitResult:
    value: float          # real part of the limit estimate
    imag: float           # imaginary part (diagnostic)
    err: float            # internal error estimate (empirical)
    mode: str
    n_used: int


def _stream_chunk(stream, n0: int, n1: int) -> np.ndarray:
    """Coefficients a_n for n in [n0, n1) from array or callable."""
    if callable(stream):
        return np.asarray(stream(n0, n1), dtype=np.float64)
    arr = np.asarray(stream, dtype=np.float64)
    if len(arr) < n1 - 1:
        raise ValueError(f"stream too short: need {n1 - 1} coefficients")
    return arr[n0 - 1:n1 - 1]


def _weighted_partial_sums(stream, phi: float, N: int, log_r: float, checkpoints):
    """Complex partial sums sum_{n<=N_c} a_n r^n p^n for each checkpoint."""
    out = []
    acc = 0j
    chunk = 1 << 15
    cp = sorted(checkpoints)
    ci = 0
    n0 = 1
    while n0 <= N and ci < len(cp):
        n1 = min(n0 + chunk, N + 1)
        n = np.arange(n0, n1, dtype=np.float64)
        a = _stream_chunk(stream, n0, n1)
        w = a * np.exp(n * log_r) if log_r != 0.0 else a
        ph = _TWO_PI * np.mod(n * phi, 1.0)
        vals = w * (np.cos(ph) + 1j * np.sin(ph))
        cums = np.cumsum(vals)
        while ci < len(cp) and cp[ci] < n1:
            out.append(acc + complex(cums[cp[ci] - n0]))
            ci += 1
        acc += complex(cums[-1])
        n0 = n1
    return out


def radial_limit(coeff_stream, p: complex, mode: str = "abel",
                 j_lo: int = 8, j_hi: int = 14,
                 cesaro_N: int = 4 * 10 ** 5) -> RadialLimitResult:
    """Estimate limrad_{z -> p} (1 - |z|) F(z) for F(z) = sum a_n z^n with
    an at-most-logarithmic coefficient stream and unimodular p.

    Cesaro mode: means (1/N) sum a_n p^n at N = cesaro_N/4, /2, /1 with a
    Richardson step (Frobenius' lemma ties the mean to the radial limit).
    Abel mode: (1 - r) F(r p) at r = 1 - 2^-j, j = j_lo..j_hi, truncated at
    N = ceil(40/(1-r)), with a Richardson step.  The two modes must agree
    within their combined (empirical) error estimates."""
    p = complex(p)
    phi = cmath.phase(p) / _TWO_PI
    if mode == "cesaro":
        Ns = [cesaro_N // 4, cesaro_N // 2, cesaro_N]
        sums = _weighted_partial_sums(coeff_stream, phi, Ns[-1], 0.0, Ns)
        means = [s / n for s, n in zip(sums, Ns)]
        r1 = 2 * means[1] - means[0]
        r2 = 2 * means[2] - means[1]
        err = abs(r2 - r1) + abs(means[2] - r2) / 3
        return RadialLimitResult(r2.real, r2.imag, err, "cesaro", Ns[-1])
    if mode == "abel":
        vals = []
        n_used = 0
        for j in range(j_lo, j_hi + 1):
            one_minus_r = 2.0 ** (-j)
            log_r = math.log1p(-one_minus_r)
            N = int(math.ceil(40.0 / one_minus_r))
            s = _weighted_partial_sums(coeff_stream, phi, N, log_r, [N])[0]
            vals.append(one_minus_r * s)
            n_used = max(n_used, N)
        rich = [2 * b - a for a, b in zip(vals, vals[1:])]
        est = rich[-1]
        err = abs(rich[-1] - rich[-2]) + abs(vals[-1] - est) / 3
        return RadialLimitResult(est.real, est.imag, err, "abel", n_used)
    raise ValueError("mode must be 'cesaro' or 'abel'")


def unimodular_log_stream(theta):
    """Stream a_n = log|1 - e^{2 pi i n theta}| as a chunk callable backed by
    the fixed-point kernel (exact orbit arithmetic)."""
    fp = kernels.fixed_point_angle(theta)

    def chunk(n0: int, n1: int):
        return kernels.log_sin_stream(fp, n0, n1 - n0)

    return chunk


def e_log_stream(delta: IntPoly):
    """The E-coefficient stream r -> log(|a|^r prod |1 - beta^r|) of an
    integer polynomial, unimodular parts through the exact-orbit kernel
    (angles polished at 160 bits), off-circle parts in closed form.
    Vanishing (prime-rule) coefficients come out as the off-circle part
    only, matching the omission convention."""
    from .polyalg import classify_roots, ROOT_OF_UNITY, INSIDE, OUTSIDE, DIOPHANTINE

    prof = classify_roots(delta)
    log_lead = math.log(prof.leading_abs)
    off = [rec for rec in prof.roots if rec.kind in (INSIDE, OUTSIDE)]
    # polish diophantine angles once, matching records by proximity
    angles = []
    if any(r.kind == DIOPHANTINE for r in prof.roots):
        with mp.workprec(192):
            high = roots(delta, as_mpc=True)
            for rec in prof.roots:
                if rec.kind != DIOPHANTINE:
                    continue
                best = min(high, key=lambda t: abs(complex(t[0]) - rec.value))
                ang = mp.arg(mp.mpc(best[0])) / (2 * mp.pi) % 1
                for _ in range(rec.multiplicity):
                    angles.append(kernels.fixed_point_angle(ang))
    rou_fps = []
    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            k = round(cmath.phase(rec.value) / _TWO_PI * rec.order) % rec.order
            for _ in range(rec.multiplicity):
                rou_fps.append(kernels.fixed_point_angle(Fraction(k, rec.order)))

    def chunk(n0: int, n1: int):
        n = np.arange(n0, n1, dtype=np.float64)
        total = n * log_lead
        for fp in angles + rou_fps:
            total = total + kernels.log_sin_stream(fp, n0, n1 - n0)
        for rec in off:
            b = rec.value
            if rec.kind == OUTSIDE:
                lb = math.log(abs(b))
                binv = 1 / b
                pw = np.power(np.abs(binv), n) * np.exp(1j * n * cmath.phase(binv))
                total = total + rec.multiplicity * (n * lb + np.log(np.abs(1 - pw)))
            else:
                pw = np.power(np.abs(b), n) * np.exp(1j * n * cmath.phase(b))
                total = total + rec.multiplicity * np.log(np.abs(1 - pw))
        return total

    return chunk


# ----------------------------------------------------------------------------
# Multiplicative dependence
# ----------------------------------------------------------------------------

@dataclass
class DependenceVerdict:
    relation: tuple | None   # integer vector on (1, angles..., target)
    residual: float
    precision_bits: int

    @property
    def independent_at_precision(self) -> bool:
        return self.relation is None


def multiplicative_dependence(angles, target, precision_bits: int = 256) -> DependenceVerdict:
    """PSLQ integer-relation search on (1, angles..., target).

    Any reported relation is verified by direct substitution to
    10^(-precision_bits/4); angles should be supplied at (at least) the
    requested precision for the verdict to be meaningful.
    IndependentAtPrecision is a verdict, not an error: ``relation is None``.
    """
    with mp.workprec(precision_bits):
        vec = [mp.mpf(1)]
        for a in list(angles) + [target]:
            vec.append(+mp.mpf(a) if not isinstance(a, mp.mpf) else +a)
        rel = mp.pslq(vec, tol=mp.mpf(2) ** int(-precision_bits * 0.7),
                      maxcoeff=10 ** 10, maxsteps=10 ** 4)
        if rel is None:
            return DependenceVerdict(None, math.inf, precision_bits)
        resid = abs(mp.fsum(c * v for c, v in zip(rel, vec)))
        threshold = mp.mpf(10) ** (-(precision_bits // 4))
        if resid > threshold:
            return DependenceVerdict(None, float(resid), precision_bits)
        return DependenceVerdict(tuple(int(c) for c in rel), float(resid), precision_bits)
