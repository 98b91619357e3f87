"""Knot-facing layer: exact branched-cover torsion orders (Fox), the
generating function E and its continuation, pole sets, residues, Laurent
data at z = 1, the growth slope, periodicity classification, periodic-part
error bounds, root reconstruction from poles, and alternating
Reidemeister-torsion products.

Input is the Alexander polynomial itself; any integer polynomial is
accepted (the machinery is polynomial-generic and shared with the cyclic
resultant tools), with a warning when Delta(1) != +-1 or Delta is not
reciprocal.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from . import rxcore
from .continuation import ContinuationParams, rx_continued
from .errors import (AmbiguousGenerators, NaturalBoundary, NotAPole, PoleHit,
                     RootOfUnityCollision)
from .polyalg import (INSIDE, OUTSIDE, ROOT_OF_UNITY, IntPoly, RootProfile,
                      classify_roots, power_minus_one, resultant_exact)
from .rxcore import EvalResult

R_EXACT_CAP = 64

_PROFILE_CACHE: dict = {}


def profile_of(delta: IntPoly) -> RootProfile:
    key = delta.coeffs
    if key not in _PROFILE_CACHE:
        _PROFILE_CACHE[key] = classify_roots(delta)
    return _PROFILE_CACHE[key]


def _warn_if_not_alexander(delta: IntPoly):
    if abs(delta(1)) != 1:
        warnings.warn(
            f"Delta(1) = {delta(1)} is not +-1; input is not an Alexander "
            "polynomial but the machinery applies anyway",
            stacklevel=3,
        )
    elif not delta.is_reciprocal():
        warnings.warn("input polynomial is not reciprocal", stacklevel=3)


def _rou_k(record) -> int:
    """Exponent k with record.value = e^{2 pi i k/m}."""
    m = record.order
    k = round(cmath.phase(record.value) / (2 * math.pi) * m) % m
    return k


# ----------------------------------------------------------------------------
# Exact torsion values
# ----------------------------------------------------------------------------

def fox_torsion(delta: IntPoly, r: int) -> int:
    """|Res(Delta, t^r - 1)| exactly; equals prod_{zeta^r=1} |Delta(zeta)|,
    the branched-cover torsion order.  0 signals an r-th root of unity among
    the roots (infinite homology)."""
    if delta.is_zero():
        raise ValueError("zero polynomial")
    if r < 1:
        raise ValueError("r >= 1 required")
    if delta.degree == 0:
        return abs(delta.coeffs[0]) ** r
    return abs(resultant_exact(delta, power_minus_one(r)))


@dataclass
class TorsionTable:
    """Map r -> exact |Res(Delta, t^r - 1)|, with omission markers where the
    value is 0 (prime rule: those covers have infinite homology)."""

    entries: dict
    omitted: set

    def log_value(self, r: int) -> float:
        v = self.entries[r]
        return math.log(v)


def torsion_table(delta: IntPoly, r_max: int) -> TorsionTable:
    entries = {}
    omitted = set()
    for r in range(1, r_max + 1):
        v = fox_torsion(delta, r)
        if v == 0:
            omitted.add(r)
        else:
            entries[r] = v
    return TorsionTable(entries=entries, omitted=omitted)


def e_series(delta: IntPoly, N: int, r_exact_cap: int = R_EXACT_CAP):
    """Coefficients of E: [(r, log |H1|)] with the prime rule (vanishing
    values omitted).  Exact resultants through r_exact_cap, the float
    product |a|^r prod |1 - beta_i^r| beyond; in the overlap both routes
    must agree to 1e-9 relative."""
    _warn_if_not_alexander(delta)
    prof = profile_of(delta)
    out = []
    for r in range(1, N + 1):
        if r <= r_exact_cap:
            v = fox_torsion(delta, r)
            if v == 0:
                continue
            lv = math.log(v)
            fl = _float_log_torsion(prof, r)
            if fl is not None and abs(lv - fl) > 1e-9 * max(1.0, abs(lv)):
                raise ArithmeticError(
                    f"exact/float torsion mismatch at r={r}: {lv} vs {fl}"
                )
            out.append((r, lv))
        else:
            fl = _float_log_torsion(prof, r)
            if fl is not None:
                out.append((r, fl))
    return out


def _float_log_torsion(prof: RootProfile, r: int):
    """log(|a|^r prod |1 - beta^r|) from the root profile; None if 0."""
    total = r * math.log(prof.leading_abs)
    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            if r % rec.order == 0:
                return None
            total += rec.multiplicity * math.log(abs(1 - rec.value ** r))
        elif rec.kind == OUTSIDE:
            # log|1 - b^r| = r log|b| + log|1 - b^-r|
            total += rec.multiplicity * (
                r * math.log(abs(rec.value))
                + math.log(abs(1 - rec.value ** (-r)))
            )
        else:
            total += rec.multiplicity * math.log(abs(1 - rec.value ** r))
    return total


# ----------------------------------------------------------------------------
# Continuation of E (shared engine, also used for cyclic resultants)
# ----------------------------------------------------------------------------

def continued_from_profile(prof: RootProfile, z: complex,
                           params: ContinuationParams | None = None) -> EvalResult:
    """log M * z/(z-1)^2 + sum over roots of the continued R-summands,
    multiplicity-weighted (outside roots via inversion, roots of unity via
    their exact rational forms).

    The prime rule acts per root summand: when some (but not all) factors
    vanish at an index r, this assembly keeps the non-vanishing parts, while
    the omission-marked torsion series drops the whole coefficient (the two
    conventions coincide whenever no resultant vanishes, which is the regime
    every series-agreement check runs in)."""
    dio = prof.diophantine
    if dio:
        raise NaturalBoundary([r.value for r in dio])
    z = complex(z)
    log_m = prof.log_mahler
    value = 0j
    bound = 0.0
    terms = 0
    if log_m != 0.0:
        if abs(z - 1) < 1e-12:
            raise PoleHit(1 + 0j)
        value += log_m * z / (z - 1) ** 2
    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            r = rxcore.rx_root_of_unity(rec.order, _rou_k(rec), z)
        elif rec.kind == INSIDE:
            r = rx_continued(rec.value, z, params)
        else:  # OUTSIDE: R_{1/beta}; the log|beta| z/(z-1)^2 part is in log M
            r = rx_continued(1 / rec.value, z, params)
        value += rec.multiplicity * r.value
        bound += rec.multiplicity * r.tail_bound
        terms += r.terms_used
    return EvalResult(value=value, tail_bound=bound, terms_used=terms)


def e_continued(delta: IntPoly, z: complex,
                params: ContinuationParams | None = None) -> EvalResult:
    """The meromorphic continuation of E(z) = sum log|H1(X_r)_tor| z^r."""
    _warn_if_not_alexander(delta)
    _, g = delta.shift_out_zero_roots()
    return continued_from_profile(profile_of(g), z, params)


# ----------------------------------------------------------------------------
# Poles
# ----------------------------------------------------------------------------

@dataclass
class PoleReport:
    location: complex
    order: int                      # 1 or 2; 2 only at z = 1
    generator: complex | None       # generating root beta (None at z = 1)
    exponent: int | None            # n with location = beta^n
    residue_estimate: complex | None


def _rational_residue_at(prof: RootProfile, q: complex) -> complex:
    """Closed-form residue at q (q^m = 1) of the root-of-unity summands."""
    total = 0j
    for rec in prof.roots:
        if rec.kind != ROOT_OF_UNITY:
            continue
        m = rec.order
        if abs(q ** m - 1) > 1e-9:
            continue
        form = rxcore.rational_form(m, _rou_k(rec))
        num = 0j
        ql = 1 + 0j
        for c in form.numerator_coeffs:
            ql *= q
            num += c * ql
        total += rec.multiplicity * (-(q / m) * num)
    return total


def pole_set(delta: IntPoly, radius_max: float,
             compute_residues: bool = True) -> list:
    """All poles of the continuation with 1 <= |location| <= radius_max.

    Pole set {beta^n : n in Z} minus the open unit disc; z = 1 has order 2
    iff the Mahler measure exceeds 1, order 1 when M = 1 with root-of-unity
    roots (their rational forms).  Residues: closed form at root-of-unity
    poles, numeric (Richardson) elsewhere; the z = 1 residue is reported
    only for the order-1 case.
    """
    _, g = delta.shift_out_zero_roots()
    prof = profile_of(g)
    if prof.diophantine:
        raise NaturalBoundary([r.value for r in prof.diophantine])
    reports: list[PoleReport] = []

    mahler_gt_1 = prof.leading_abs > 1 or any(r.kind == OUTSIDE for r in prof.roots)
    # order-1 roots contribute the zero function, hence no pole at z = 1
    has_rou = any(r.kind == ROOT_OF_UNITY and r.order > 1 for r in prof.roots)
    if mahler_gt_1:
        reports.append(PoleReport(1 + 0j, 2, None, None, None))
    elif has_rou:
        res = _rational_residue_at(prof, 1 + 0j) if compute_residues else None
        reports.append(PoleReport(1 + 0j, 1, None, None, res))

    seen = {}

    def _add(location, generator, exponent):
        for loc in seen:
            if abs(loc - location) < 1e-9:
                return
        seen[location] = (generator, exponent)

    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            m = rec.order
            for n in range(1, m + 1):
                q = cmath.exp(2j * math.pi * n * _rou_k(rec) / m)
                if abs(q - 1) < 1e-9:
                    continue
                _add(q, rec.value, n)
        else:
            beta = rec.value
            if rec.kind == INSIDE:
                step = -1
            else:
                step = 1
            n = step
            while True:
                p = beta ** n
                if abs(p) > radius_max + 1e-9:
                    break
                if abs(p) >= 1 - 1e-12 and abs(p - 1) > 1e-9:
                    _add(p, beta, n)
                n += step
                if abs(n) > 400:
                    break

    for loc, (generator, exponent) in seen.items():
        res = None
        if compute_residues:
            if abs(abs(loc) - 1) < 1e-9:
                res = _rational_residue_at(prof, loc)
            else:
                try:
                    res = residue_at(delta, loc)
                except (NotAPole, PoleHit):
                    res = None
        reports.append(PoleReport(loc, 1, generator, exponent, res))
    reports.sort(key=lambda r: (abs(r.location), cmath.phase(r.location)))
    return reports


def residue_at(delta: IntPoly, p: complex) -> complex:
    """Numeric residue at a simple pole p: Richardson-extrapolated limit of
    (z - p) E(z) along z = p(1 + 2^-j), j = 6..12.

    Raises NotAPole when the limit tends to 0 (below 1e-8) and PoleHit when
    the samples diverge like a double pole (z = 1 with M > 1; use
    laurent_at_one for the order-2 data there)."""
    p = complex(p)
    vals = []
    for j in range(6, 13):
        z = p * (1 + 2.0 ** (-j))
        vals.append((z - p) * e_continued(delta, z).value)
    if abs(vals[-1]) > 4 * abs(vals[0]) + 1e-12:
        raise PoleHit(p, generator=None, exponent=None)
    # Richardson for step-halving: error c1 h + c2 h^2 + ...
    table = [list(vals)]
    for lev in range(1, len(vals)):
        prev = table[-1]
        row = []
        for i in range(len(prev) - 1):
            row.append((2 ** lev * prev[i + 1] - prev[i]) / (2 ** lev - 1))
        table.append(row)
    limit = table[-1][0]
    if abs(limit) < 1e-8:
        raise NotAPole(f"limit {limit} vanishes at {p}")
    return limit


# ----------------------------------------------------------------------------
# Laurent data at z = 1
# ----------------------------------------------------------------------------

@dataclass
class LaurentAtOne:
    c_minus2: float
    c_minus1: float
    c_0: float


def laurent_at_one(delta: IntPoly) -> LaurentAtOne:
    """Closed-form start of the Laurent expansion of E at z = 1:

        c_-2 = log M
        c_-1 = log M + sum_{rou, ord m} (1/m) log(1/m)
        c_0  = -sum_{|beta| != 1} log|F(beta^+-)|  +  sum_{rou} constants

    multiplicity-weighted; beta^+- is beta if |beta| < 1 and 1/beta if
    |beta| > 1."""
    _, g = delta.shift_out_zero_roots()
    prof = profile_of(g)
    if prof.diophantine:
        raise NaturalBoundary([r.value for r in prof.diophantine])
    log_m = prof.log_mahler
    c2 = log_m
    c1 = log_m
    c0 = 0.0
    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            if rec.order == 1:
                continue  # R_1 is the zero function: no contribution
            res, const = rxcore.rx_laurent_at_one_rootofunity(rec.order, _rou_k(rec))
            c1 += rec.multiplicity * res
            c0 += rec.multiplicity * const
        else:
            b = rec.value if rec.kind == INSIDE else 1 / rec.value
            c0 -= rec.multiplicity * rxcore.log_abs_F(b)
    return LaurentAtOne(c_minus2=c2, c_minus1=c1, c_0=c0)


def laurent_numeric(delta: IntPoly, k_max: int = 0, rho: float = 0.05,
                    nodes: int = 512) -> dict:
    """Laurent coefficients c_k (k = -2..k_max) of E at z = 1 by trapezoidal
    Cauchy integrals on |z - 1| = rho; rho shrinks automatically if another
    pole sits within 3*rho."""
    _, g = delta.shift_out_zero_roots()
    prof = profile_of(g)
    if prof.diophantine:
        raise NaturalBoundary([r.value for r in prof.diophantine])
    # keep clear of the nearest non-unit pole
    min_dist = math.inf
    for rep in pole_set(delta, 16.0, compute_residues=False):
        if abs(rep.location - 1) > 1e-9:
            min_dist = min(min_dist, abs(rep.location - 1))
    if min_dist < 3 * rho:
        rho = min_dist / 3
    samples = []
    for j in range(nodes):
        phi = 2 * math.pi * j / nodes
        z = 1 + rho * cmath.exp(1j * phi)
        samples.append(e_continued(delta, z).value)
    out = {}
    for k in range(-2, k_max + 1):
        acc = 0j
        for j, val in enumerate(samples):
            phi = 2 * math.pi * j / nodes
            acc += val * cmath.exp(-1j * k * phi)
        out[k] = acc / nodes * rho ** (-k)
    return out


# ----------------------------------------------------------------------------
# Slope, Gordon classification, periodic part
# ----------------------------------------------------------------------------

def silver_williams_slope(delta: IntPoly, r_max: int):
    """(log fox_torsion(r)/r at the largest non-omitted r <= r_max,
    log Mahler reference)."""
    prof = profile_of(delta)
    r = r_max
    while r >= 1:
        v = fox_torsion(delta, r)
        if v != 0:
            return math.log(v) / r, prof.log_mahler
        r -= 1
    raise ValueError("all torsion values vanish up to r_max")


@dataclass
class GordonVerdict:
    periodic: bool
    period: int | None
    evidence: tuple  # cyclotomic factorization record: ((order, multiplicity), ...)


def gordon_classify(delta: IntPoly) -> GordonVerdict:
    """Periodic torsion iff every root is a root of unity (exact cyclotomic
    witness) and |lc| = 1; the period is the lcm of the primitive orders."""
    _, g = delta.shift_out_zero_roots()
    prof = profile_of(g)
    orders = {}
    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            orders[rec.order] = rec.multiplicity
    evidence = tuple(sorted(orders.items()))
    periodic = (
        prof.leading_abs == 1
        and all(r.kind == ROOT_OF_UNITY for r in prof.roots)
    )
    if not periodic:
        return GordonVerdict(False, None, evidence)
    period = 1
    for m in orders:
        period = period * m // math.gcd(period, m)
    return GordonVerdict(True, period, evidence)


def periodic_part_and_bound(delta: IntPoly, r_verify: int = 60):
    """(m, one period a_0..a_{m-1}, bound) with

        |log fox_torsion(r) - (a_{r mod m} + r log M)| <= bound(r),
        bound(r) = sum_{|beta| != 1} |beta^+-|^r / (1 - |beta^+-|^r),

    verified against exact torsion for r = 1..r_verify (non-omitted r).
    a_r collects the root-of-unity summands (prime rule inside); m is the
    lcm of their orders (1 if none)."""
    _, g = delta.shift_out_zero_roots()
    prof = profile_of(g)
    if prof.diophantine:
        raise NaturalBoundary([r.value for r in prof.diophantine])
    m = 1
    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            m = m * rec.order // math.gcd(m, rec.order)
    a = []
    for j in range(m):
        s = 0.0
        for rec in prof.roots:
            if rec.kind != ROOT_OF_UNITY:
                continue
            if j % rec.order == 0:
                continue  # prime rule
            s += rec.multiplicity * math.log(abs(1 - rec.value ** j))
        a.append(s)

    moduli = []
    for rec in prof.roots:
        if rec.kind == INSIDE:
            moduli.append((abs(rec.value), rec.multiplicity))
        elif rec.kind == OUTSIDE:
            moduli.append((1 / abs(rec.value), rec.multiplicity))

    def bound(r: int) -> float:
        total = 0.0
        for rho, mult in moduli:
            total += mult * rho ** r / (1 - rho ** r)
        return total

    log_m = prof.log_mahler
    for r in range(1, r_verify + 1):
        v = fox_torsion(delta, r)
        if v == 0:
            continue
        lhs = abs(math.log(v) - (a[r % m] + r * log_m))
        if lhs > bound(r) + 1e-9:
            raise ArithmeticError(
                f"periodic-part bound violated at r={r}: {lhs} > {bound(r)}"
            )
    return m, a, bound


# ----------------------------------------------------------------------------
# Reconstruction from poles
# ----------------------------------------------------------------------------

@dataclass
class FriedReconstruction:
    """Reciprocal-closed root data recovered from pole reports.

    ``pairs``: (representative p with |p| > 1, total multiplicity), meaning
    the inverse pair {p, 1/p} carries that many R-summands in E.
    ``rou``: (order m, multiplicity) cyclotomic factors Phi_m."""

    pairs: list
    rou: list

    def root_multiset(self):
        """Flattened [(root, multiplicity)] with both pair members listed."""
        out = []
        for p, mult in self.pairs:
            out.append((p, mult))
            out.append((1 / p, mult))
        for m, mult in self.rou:
            for k in range(1, m + 1):
                if math.gcd(k, m) == 1:
                    out.append((cmath.exp(2j * math.pi * k / m), mult))
        return out


def _reference_pair_residue(p: complex) -> complex:
    """Residue at p of the continued R_{1/p} (a single inside-root summand)."""
    x = 1 / p
    vals = []
    for j in range(6, 13):
        z = p * (1 + 2.0 ** (-j))
        vals.append((z - p) * rx_continued(x, z).value)
    table = [list(vals)]
    for lev in range(1, len(vals)):
        prev = table[-1]
        table.append(
            [(2 ** lev * prev[i + 1] - prev[i]) / (2 ** lev - 1)
             for i in range(len(prev) - 1)]
        )
    return table[-1][0]


def _primitive_order_of(q: complex, max_order: int = 512):
    for m in range(1, max_order + 1):
        if abs(q ** m - 1) < 1e-7:
            return m
    return None


def fried_reconstruct(poles: list) -> FriedReconstruction:
    """Recover the generating roots (up to beta <-> 1/beta pairing) from a
    pole list produced by pole_set.

    Primitive generators are poles strictly outside the closed unit disc
    that are not a power q^k (k >= 2) of another pole; their multiplicity
    comes from residue linearity against a freshly computed single-summand
    reference.  Root-of-unity orbits are recognized as finite cyclic pole
    sets and solved top-down by order using the closed-form orbit residues.
    """
    offcirc = [r for r in poles if abs(abs(r.location) - 1) > 1e-9]
    oncirc = [r for r in poles if abs(abs(r.location) - 1) <= 1e-9
              and abs(r.location - 1) > 1e-9]

    pairs = []
    locations = [r.location for r in offcirc]
    for rep in offcirc:
        p = rep.location
        primitive = True
        for q in locations:
            if abs(q - p) < 1e-9:
                continue
            power = q
            for _ in range(2, 64):
                power *= q
                if abs(power) > abs(p) + 1:
                    break
                if abs(power - p) < 1e-9:
                    primitive = False
                    break
            if not primitive:
                break
        if not primitive:
            continue
        if rep.residue_estimate is None:
            raise AmbiguousGenerators(f"no residue available at {p}")
        ref = _reference_pair_residue(p)
        ratio = rep.residue_estimate / ref
        mult = round(ratio.real)
        if mult < 1 or abs(ratio - mult) > 0.05:
            raise AmbiguousGenerators(
                f"residue ratio {ratio} at {p} is not a positive integer"
            )
        pairs.append((p, mult))

    # root-of-unity content: solve factor multiplicities from orbit residues
    rou = []
    if oncirc:
        by_order: dict = {}
        for rep in oncirc:
            m = _primitive_order_of(rep.location)
            if m is None:
                raise AmbiguousGenerators(
                    f"on-circle pole {rep.location} has no small order"
                )
            by_order.setdefault(m, []).append(rep)
        counts: dict = {}
        for m in sorted(by_order, reverse=True):
            rep = by_order[m][0]
            if rep.residue_estimate is None:
                raise AmbiguousGenerators(f"no residue at {rep.location}")
            acc = rep.residue_estimate
            # subtract contributions of already-identified higher factors
            for m2, mult2 in counts.items():
                if m2 % m == 0 and m2 != m:
                    acc -= mult2 * _phi_orbit_residue(m2, rep.location)
            ref = _phi_orbit_residue(m, rep.location)
            ratio = acc / ref
            mult = round(ratio.real)
            if abs(ratio - mult) > 0.05:
                raise AmbiguousGenerators(
                    f"orbit residue ratio {ratio} at order {m}"
                )
            if mult:
                counts[m] = mult
        rou = sorted(counts.items())
    return FriedReconstruction(pairs=sorted(pairs, key=lambda t: abs(t[0])), rou=rou)


def _phi_orbit_residue(m: int, q: complex) -> complex:
    """Residue at q of sum over primitive m-th roots zeta of the rational
    form of R_zeta (the full Phi_m orbit, multiplicity 1)."""
    total = 0j
    for k in range(1, m + 1):
        if math.gcd(k, m) != 1:
            continue
        form = rxcore.rational_form(m, k)
        num = 0j
        ql = 1 + 0j
        for c in form.numerator_coeffs:
            ql *= q
            num += c * ql
        total += -(q / m) * num
    return total


def pair_signature(prof: RootProfile):
    """Collapse a root profile to the same shape fried_reconstruct returns:
    inverse-pair keys with total multiplicity, plus Phi_m multiplicities."""
    pairs: dict = {}
    rou: dict = {}
    for rec in prof.roots:
        if rec.kind == ROOT_OF_UNITY:
            rou[rec.order] = rec.multiplicity
        else:
            p = rec.value if abs(rec.value) > 1 else 1 / rec.value
            for key in list(pairs):
                if abs(key - p) < 1e-6:
                    pairs[key] += rec.multiplicity
                    break
            else:
                pairs[p] = rec.multiplicity
    return (sorted(((p, m) for p, m in pairs.items()), key=lambda t: abs(t[0])),
            sorted(rou.items()))


# ----------------------------------------------------------------------------
# Reidemeister torsion products (higher-dimensional knots)
# ----------------------------------------------------------------------------

def reidemeister_tau(deltas: list, r: int) -> Fraction:
    """tau_r = prod_i |H_i|^{(-1)^{i+1}} = prod_i fox_torsion(delta_i, r)
    ^{(-1)^{i+1}} as an exact fraction (i is 1-based)."""
    num = 1
    den = 1
    for i, d in enumerate(deltas, start=1):
        v = fox_torsion(d, r)
        if v == 0:
            raise RootOfUnityCollision(
                f"delta #{i} has an r-th root of unity root at r={r}"
            )
        if i % 2 == 1:
            num *= v
        else:
            den *= v
    return Fraction(num, den)


def reidemeister_j_continued(deltas: list, z: complex,
                             params: ContinuationParams | None = None) -> EvalResult:
    """J(z) = sum_i (-1)^{i+1} E_i(z), the continued Reidemeister generating
    function (alternating sum of the per-polynomial E machinery)."""
    value = 0j
    bound = 0.0
    terms = 0
    for i, d in enumerate(deltas, start=1):
        _, g = d.shift_out_zero_roots()
        r = continued_from_profile(profile_of(g), z, params)
        sign = 1 if i % 2 == 1 else -1
        value += sign * r.value
        bound += r.tail_bound
        terms += r.terms_used
    return EvalResult(value=value, tail_bound=bound, terms_used=terms)
