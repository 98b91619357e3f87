"""Exact integer-polynomial arithmetic, resultants, cyclotomic detection,
complex root finding and classification, continued fractions.

Polynomials are dense integer coefficient sequences in ascending degree:
index i is the coefficient of t**i, so ``IntPoly([6, -13, 6])`` is
6 - 13 t + 6 t**2.  The same ascending convention is used by the text form
("6,-13,6") and the JSON form ({"coeffs": [6, -13, 6]}).
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .errors import NonConvergence, PrecisionExhausted, ZeroInput

# Roots with ||beta| - 1| below this (and not exactly cyclotomic) count as
# on-circle; cyclotomic membership is decided exactly, so this tolerance only
# separates diophantine roots from off-circle ones.
CIRCLE_TOL = 1e-9

POLISH_PREC_BITS = 128


# ----------------------------------------------------------------------------
# IntPoly
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients ascending by degree."""

    coeffs: tuple

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse either "6,-13,6" (ascending degree) or '{"coeffs": [6,-13,6]}'."""
        text = text.strip()
        if text.startswith("{"):
            data = json.loads(text)
            return cls([int(c) for c in data["coeffs"]])
        return cls([int(part) for part in text.split(",")])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        """Evaluate by Horner; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def is_reciprocal(self) -> bool:
        """Palindromic up to sign: coeffs == +-reversed coeffs."""
        cs = self.coeffs
        return bool(cs) and (cs == cs[::-1] or cs == tuple(-c for c in cs[::-1]))

    def shift_out_zero_roots(self):
        """Return (k, g) with self = t**k * g and g(0) != 0."""
        if self.is_zero():
            return 0, self
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k, IntPoly(self.coeffs[k:])

    def mul(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def pow(self, n: int) -> "IntPoly":
        out = IntPoly([1])
        for _ in range(n):
            out = out.mul(self)
        return out

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self):
        return self.text()


def divide_exact(f: IntPoly, g: IntPoly):
    """Exact division f / g over the integers; returns None if not exact."""
    if g.is_zero():
        raise ZeroInput("division by zero polynomial")
    if f.is_zero():
        return IntPoly([])
    if f.degree < g.degree:
        return None
    rem = list(f.coeffs)
    out = [0] * (f.degree - g.degree + 1)
    glead = g.coeffs[-1]
    for i in range(f.degree - g.degree, -1, -1):
        c = rem[i + g.degree]
        if c % glead:
            return None
        q = c // glead
        out[i] = q
        if q:
            for j, gc in enumerate(g.coeffs):
                rem[i + j] -= q * gc
    if any(rem[: g.degree]):
        return None
    return IntPoly(out)


# --- rational-coefficient helpers (dense ascending Fraction lists) ----------

def _q_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _q_from_int(f: IntPoly):
    return [Fraction(c) for c in f.coeffs]


def _q_mod(a, b):
    """a mod b for Fraction lists, b nonzero."""
    a = a[:]
    while len(a) >= len(b) and a:
        q = a[-1] / b[-1]
        off = len(a) - len(b)
        for j in range(len(b)):
            a[off + j] -= q * b[j]
        a.pop()
        _q_trim(a)
    return a


def _q_divexact(a, b):
    """a / b for Fraction lists assuming exact divisibility."""
    a = a[:]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = a[i + len(b) - 1] / b[-1]
        out[i] = q
        for j in range(len(b)):
            a[i + j] -= q * b[j]
    return out


def _q_derivative(a):
    return [i * c for i, c in enumerate(a)][1:]


def _q_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _q_trim(out)


def _q_gcd(a, b):
    a, b = _q_trim(a[:]), _q_trim(b[:])
    while b:
        a, b = b, _q_mod(a, b)
    return a


def _q_to_primitive_int(a) -> IntPoly:
    """Clear denominators, divide by content, normalize sign."""
    if not a:
        return IntPoly([])
    lcm_den = 1
    for c in a:
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in a]
    g_all = 0
    for c in ints:
        g_all = math.gcd(g_all, abs(c))
    if g_all > 1:
        ints = [c // g_all for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(ints)


def poly_gcd_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive integer gcd of f and g, computed over the rationals."""
    return _q_to_primitive_int(_q_gcd(_q_from_int(f), _q_from_int(g)))


def squarefree_decomposition(f: IntPoly):
    """Yun's algorithm over Q: list of (g_i, i), each g_i squarefree and
    primitive with positive leading coefficient, f = unit * prod g_i**i."""
    if f.is_zero() or f.degree < 1:
        return []
    fq = _q_from_int(f)
    dfq = _q_derivative(fq)
    a = _q_gcd(fq, dfq)
    if len(a) == 1:  # constant gcd: f squarefree
        return [(_q_to_primitive_int(fq), 1)]
    b = _q_divexact(fq, a)
    c = _q_divexact(dfq, a)
    out = []
    i = 1
    while len(b) > 1:
        d = _q_sub(c, _q_derivative(b))
        if not d:
            out.append((_q_to_primitive_int(b), i))
            break
        g = _q_gcd(b, d)
        if len(g) > 1:
            out.append((_q_to_primitive_int(g), i))
        b = _q_divexact(b, g)
        c = _q_divexact(d, g)
        i += 1
    return out


# ----------------------------------------------------------------------------
# Cyclotomic polynomials and resultants
# ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, via iterated exact division of t**d - 1."""
    if d < 1:
        raise ValueError("order must be >= 1")
    f = IntPoly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            f = divide_exact(f, cyclotomic(e))
    return f


def euler_phi(d: int) -> int:
    result, n, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def sylvester_matrix(f: IntPoly, g: IntPoly):
    m, n = f.degree, g.degree
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (m - 1 - i))
    return rows


def _bareiss_determinant(mat) -> int:
    """Fraction-free Bareiss elimination; exact integer determinant."""
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = mat[k][k]
        row_k = mat[k]
        for i in range(k + 1, n):
            row_i = mat[i]
            mik = row_i[k]
            if mik:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - mik * row_k[j]) // prev
                row_i[k] = 0
            elif pivot != prev:
                for j in range(k + 1, n):
                    if row_i[j]:
                        row_i[j] = (pivot * row_i[j]) // prev
        prev = pivot
    return sign * mat[n - 1][n - 1]


def resultant_exact(f: IntPoly, g: IntPoly) -> int:
    """Signed resultant Res(f, g) = lc(f)**deg(g) * prod_{f(a)=0} g(a), exactly.

    Computed as the Sylvester determinant by fraction-free Bareiss
    elimination.  Torsion-facing callers take the absolute value.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroInput("resultant of the zero polynomial")
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    return _bareiss_determinant(sylvester_matrix(f, g))


def power_minus_one(r: int) -> IntPoly:
    """t**r - 1."""
    return IntPoly([-1] + [0] * (r - 1) + [1])


# ----------------------------------------------------------------------------
# Root finding: Aberth-Ehrlich with extended-precision Newton polishing
# ----------------------------------------------------------------------------

def _horner_c(cs, x):
    acc = 0j
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _aberth_simple_roots(coeffs, maxiter=400, tol=1e-13):
    """Aberth-Ehrlich simultaneous iteration on a squarefree monic polynomial.

    ``coeffs`` ascending complex, leading coefficient 1.  Returns roots or
    raises NonConvergence with the best residual.
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return [-coeffs[0]]
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    zs = [
        0.8 * radius * cmath.exp(2j * math.pi * (k + 0.35) / deg + 0.4j)
        for k in range(deg)
    ]
    dcoeffs = [i * c for i, c in enumerate(coeffs)][1:]
    scale = max(1.0, max(abs(c) for c in coeffs))
    best = math.inf
    for _ in range(maxiter):
        moved = 0.0
        for i in range(deg):
            z = zs[i]
            pz = _horner_c(coeffs, z)
            dpz = _horner_c(dcoeffs, z)
            if dpz == 0:
                zs[i] = z * 1.0001 + 0.01j
                moved = math.inf
                continue
            newton = pz / dpz
            rep = sum(1 / (z - zs[j]) for j in range(deg) if j != i)
            denom = 1 - newton * rep
            step = newton / denom if denom != 0 else newton
            zs[i] = z - step
            moved = max(moved, abs(step) / (1 + abs(z)))
        resid = max(abs(_horner_c(coeffs, z)) for z in zs)
        best = min(best, resid)
        if moved < tol and resid < 1e-10 * scale:
            return zs
    if best < 1e-7 * scale:
        return zs
    raise NonConvergence("Aberth iteration did not converge", best_residual=best)


def _polish_root(f: IntPoly, z0, prec_bits=POLISH_PREC_BITS, steps=60):
    """Newton-polish a simple root at extended precision; returns mpc."""
    with mp.workprec(prec_bits):
        z = mp.mpc(z0)
        cs = [mp.mpf(c) for c in f.coeffs]
        ds = [mp.mpf(i * c) for i, c in enumerate(f.coeffs)][1:]

        def horner(coefs, x):
            acc = mp.mpc(0)
            for c in reversed(coefs):
                acc = acc * x + c
            return acc

        for _ in range(steps):
            dpz = horner(ds, z)
            if dpz == 0:
                break
            step = horner(cs, z) / dpz
            z = z - step
            if abs(step) < mp.mpf(2) ** (-prec_bits + 6) * (1 + abs(z)):
                break
        return z


def roots(f: IntPoly, precision: float = 1e-12, as_mpc: bool = False):
    """All complex roots with multiplicities: list of (root, multiplicity).

    Squarefree factors are extracted exactly first (Yun over Q), so the
    Aberth-Ehrlich stage only ever sees simple roots; each root is then
    Newton-polished at >= 128-bit working precision.  Clustering within
    10*precision is kept as a safety net, but the exact decomposition wins
    on any disagreement about multiplicities.
    """
    if f.is_zero() or f.degree < 1:
        raise ZeroInput("root finding needs degree >= 1")
    k, g = f.shift_out_zero_roots()
    out = []
    if k:
        out.append((mp.mpc(0) if as_mpc else 0j, k))
    if g.degree >= 1:
        for factor, mult in squarefree_decomposition(g):
            lead = float(factor.coeffs[-1])
            monic = [complex(float(c) / lead) for c in factor.coeffs]
            approx = _aberth_simple_roots(monic)
            for z0 in approx:
                z = _polish_root(factor, z0)
                out.append((z if as_mpc else complex(z), mult))
    # defensive cluster merge (cannot trigger for exact decompositions)
    merged = []
    for z, m in out:
        hit = None
        for idx, (w, wm) in enumerate(merged):
            if abs(complex(z) - complex(w)) < 10 * precision:
                hit = idx
                break
        if hit is None:
            merged.append([z, m])
        else:
            merged[hit][1] += m
    return [(z, m) for z, m in merged]


# ----------------------------------------------------------------------------
# Root classification
# ----------------------------------------------------------------------------

INSIDE = "inside"
OUTSIDE = "outside"
ROOT_OF_UNITY = "root_of_unity"
DIOPHANTINE = "diophantine"


@dataclass(frozen=True)
class RootRecord:
    value: complex
    multiplicity: int
    kind: str           # INSIDE / OUTSIDE / ROOT_OF_UNITY / DIOPHANTINE
    order: int | None   # primitive order for roots of unity
    provenance: str     # "exact-cyclotomic" or "numeric"


@dataclass(frozen=True)
class RootProfile:
    """Classified root multiset with Mahler measure."""

    roots: tuple
    leading_abs: int
    mahler: float
    degree: int
    zero_mult: int = 0

    @property
    def diophantine(self):
        return [r for r in self.roots if r.kind == DIOPHANTINE]

    @property
    def log_mahler(self) -> float:
        return math.log(self.leading_abs) + sum(
            r.multiplicity * math.log(abs(r.value))
            for r in self.roots
            if r.kind == OUTSIDE
        )


def classify_roots(f: IntPoly, precision: float = 1e-12) -> RootProfile:
    """Exact root-of-unity detection (cyclotomic division sweep), numeric
    circle classification for the remaining roots."""
    if f.is_zero():
        raise ZeroInput("cannot classify the zero polynomial")
    zero_mult, g = f.shift_out_zero_roots()
    records = []
    deg0 = g.degree
    # phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n**2
    for d in range(1, 2 * deg0 * deg0 + 3):
        if g.degree == 0:
            break
        if euler_phi(d) > g.degree:
            continue
        phi_d = cyclotomic(d)
        mult = 0
        while True:
            q = divide_exact(g, phi_d)
            if q is None:
                break
            g = q
            mult += 1
        if mult:
            for kk in range(1, d + 1):
                if math.gcd(kk, d) == 1:
                    records.append(
                        RootRecord(
                            value=cmath.exp(2j * math.pi * kk / d),
                            multiplicity=mult,
                            kind=ROOT_OF_UNITY,
                            order=d,
                            provenance="exact-cyclotomic",
                        )
                    )
    if g.degree >= 1:
        for z, mult in roots(g, precision):
            a = abs(z)
            if abs(a - 1) < CIRCLE_TOL:
                kind = DIOPHANTINE
            elif a < 1:
                kind = INSIDE
            else:
                kind = OUTSIDE
            records.append(RootRecord(z, mult, kind, None, "numeric"))
    lead = abs(f.lead)
    mahler = float(lead)
    for r in records:
        if r.kind == OUTSIDE:
            mahler *= abs(r.value) ** r.multiplicity
    return RootProfile(
        roots=tuple(records),
        leading_abs=lead,
        mahler=mahler,
        degree=sum(r.multiplicity for r in records),
        zero_mult=zero_mult,
    )


def mahler_measure(f: IntPoly) -> float:
    return classify_roots(f).mahler


# ----------------------------------------------------------------------------
# Continued fractions
# ----------------------------------------------------------------------------

@dataclass
class ContinuedFraction:
    theta: object
    partial_quotients: list = field(default_factory=list)
    convergents: list = field(default_factory=list)  # (p_n, q_n) pairs
    terminated: bool = False


def _cf_of_fraction(x: Fraction, N: int):
    """Partial quotients of x in (0,1): x = 1/(a1 + 1/(a2 + ...))."""
    out = []
    p, q = x.numerator, x.denominator
    while len(out) < N and p != 0:
        a, rem = divmod(q, p)
        out.append(a)
        q, p = p, rem
    return out, p == 0


def _to_fraction_with_eps(theta):
    if isinstance(theta, Fraction):
        return theta, Fraction(0)
    if isinstance(theta, int):
        return Fraction(theta), Fraction(0)
    if isinstance(theta, mp.mpf):
        prec = mp.mp.prec
        try:
            num, den = theta.as_integer_ratio()
            return Fraction(num, den), Fraction(1, 2 ** max(prec - 2, 10))
        except AttributeError:
            return Fraction(mp.nstr(theta, mp.mp.dps + 2)), Fraction(
                1, 2 ** max(prec - 4, 10)
            )
    return Fraction(float(theta)), Fraction(1, 2 ** 51)


def continued_fraction(theta, N: int) -> ContinuedFraction:
    """First N partial quotients and convergents of theta in (0, 1).

    For inexact input the expansion is computed on the interval
    [theta - eps, theta + eps] and only the common prefix is emitted, which
    makes every reported quotient certain.  Each step consumes roughly
    log2(a_n) + 1 bits of the input, so a double yields ~50 bits' worth of
    quotients.  Raises PrecisionExhausted (carrying the reliable prefix) if
    fewer than N terms survive.  Exact Fraction input terminates cleanly.
    """
    if N < 1:
        raise ValueError("N >= 1 required")
    exact, eps = _to_fraction_with_eps(theta)
    if not (0 < exact < 1):
        raise ValueError("theta must lie in (0, 1)")

    if eps == 0:
        quotients, terminated = _cf_of_fraction(exact, N)
    else:
        tiny = Fraction(1, 10 ** 50)
        lo, _ = _cf_of_fraction(max(exact - eps, tiny), N)
        hi, _ = _cf_of_fraction(min(exact + eps, 1 - tiny), N)
        quotients = []
        for a, b in zip(lo, hi):
            if a != b:
                break
            quotients.append(a)
        terminated = False

    cf = ContinuedFraction(theta=theta, terminated=terminated)
    p_prev, q_prev = 1, 0
    p_cur, q_cur = 0, 1
    for a in quotients:
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        cf.partial_quotients.append(a)
        cf.convergents.append((p_cur, q_cur))
    if len(quotients) < N and not terminated:
        raise PrecisionExhausted(len(quotients), partial=cf)
    return cf


@dataclass(frozen=True)
class ApproximabilityVerdict:
    bounded: bool
    index: int | None  # 1-based index of the first violating quotient

    @property
    def kind(self) -> str:
        return "BoundedByPrefix" if self.bounded else "ExceedsBound"


def badly_approximable_witness(cf: ContinuedFraction, bound: int) -> ApproximabilityVerdict:
    """Check a_n < bound over the computed prefix (finite evidence only)."""
    for i, a in enumerate(cf.partial_quotients, start=1):
        if a >= bound:
            return ApproximabilityVerdict(bounded=False, index=i)
    return ApproximabilityVerdict(bounded=True, index=None)
