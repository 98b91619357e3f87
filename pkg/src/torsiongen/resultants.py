"""Cyclic resultants r_m = Res(f, t^m - 1): the continued generating
function T_f, Hillar equality/decomposition for polynomials sharing
|cyclic resultants|, and exceptional-unit scans (G_u, E(u), E_0(u))."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .continuation import ContinuationParams
from .errors import (NaturalBoundary, NoDecomposition, NotAUnit, OutOfScope,
                     UnimodularConjugate, ZeroResultant)
from .polyalg import (DIOPHANTINE, INSIDE, OUTSIDE, ROOT_OF_UNITY, IntPoly,
                      classify_roots, power_minus_one, resultant_exact, roots)
from .rxcore import EvalResult
from .torsion import continued_from_profile, profile_of


def cyclic_resultants(f: IntPoly, M: int):
    """[Res(f, t^m - 1) for m = 1..M], signed and exact; zeros are permitted
    and mark root-of-unity roots."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    out = []
    for m in range(1, M + 1):
        if f.degree == 0:
            out.append(f.coeffs[0] ** m)
        else:
            out.append(resultant_exact(f, power_minus_one(m)))
    return out


def t_f_continued(f: IntPoly, z: complex,
                  params: ContinuationParams | None = None) -> EvalResult:
    """Continuation of T_f(z) = sum' log|Res(f, t^m - 1)| z^m (prime rule:
    vanishing resultants omitted).  Same engine as the torsion-facing E,
    with no reciprocity expectations; monomial factors t^k drop out."""
    _, g = f.shift_out_zero_roots()
    if g.degree < 0:
        raise ValueError("zero polynomial")
    return continued_from_profile(profile_of(g), z, params)


def hillar_equal(f: IntPoly, g: IntPoly, M: int) -> bool:
    """Exact comparison |r_m(f)| == |r_m(g)| for m = 1..M.

    Raises ZeroResultant(m) when either sequence vanishes (Hillar's theorem
    requires all cyclic resultants nonzero)."""
    rf = cyclic_resultants(f, M)
    rg = cyclic_resultants(g, M)
    for m, (a, b) in enumerate(zip(rf, rg), start=1):
        if a == 0 or b == 0:
            raise ZeroResultant(m)
    return all(abs(a) == abs(b) for a, b in zip(rf, rg))


@dataclass
class HillarDecomposition:
    """Witness of |r_m(f)| = |r_m(g)|:

        f(t) = sign * t^l1 * v(t) * u(1/t) t^{deg u}
        g(t) = t^l2 * v(t) * u(t)

    v collects the common (same-parity) roots, u the inverted
    (opposite-parity) ones; ``integral`` marks that the coefficients were
    rounded to integers and the identities re-verified exactly."""

    u: tuple      # complex coefficients, ascending
    v: tuple      # complex coefficients, ascending
    l1: int
    l2: int
    sign: int
    integral: bool


def _poly_from_roots(root_list, lead=1.0 + 0j):
    coeffs = [lead]
    for r in root_list:
        # multiply by (t - r)
        coeffs = [0j] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return coeffs


def _reverse_poly(coeffs):
    """u(1/t) t^{deg u}: reversed coefficient sequence."""
    return list(reversed(coeffs))


def _poly_mul(a, b):
    out = [0j] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _expand_profile_roots(prof):
    out = []
    for rec in prof.roots:
        for _ in range(rec.multiplicity):
            out.append(rec.value)
    return out


def hillar_decompose(f: IntPoly, g: IntPoly, tol: float = 1e-8) -> HillarDecomposition:
    """Find the (u, v, l1, l2, sign) witness for |r_m(f)| = |r_m(g)|.

    Restricted to the generic case of the new proof: no root of f or g may
    lie on the unit circle (OutOfScope otherwise, per Hillar's broader
    statement).  Roots of f and g are matched up to inversion within
    ``tol``; matching failure raises NoDecomposition."""
    l1, f0 = f.shift_out_zero_roots()
    l2, g0 = g.shift_out_zero_roots()
    pf = profile_of(f0)
    pg = profile_of(g0)
    for prof in (pf, pg):
        if any(r.kind in (ROOT_OF_UNITY, DIOPHANTINE) for r in prof.roots):
            raise OutOfScope(
                "unimodular roots present; only the off-circle case is implemented"
            )
    froots = _expand_profile_roots(pf)
    groots = _expand_profile_roots(pg)
    if len(froots) != len(groots):
        raise NoDecomposition("degree mismatch after stripping monomials")
    same = []      # common roots -> v
    opposite = []  # g's version of inverted pairs -> u
    remaining = list(froots)
    for rg in groots:
        direct = min(remaining, key=lambda r: abs(r - rg), default=None)
        if direct is not None and abs(direct - rg) < tol:
            same.append(rg)
            remaining.remove(direct)
            continue
        inv = min(remaining, key=lambda r: abs(r - 1 / rg), default=None)
        if inv is not None and abs(inv - 1 / rg) < tol:
            opposite.append(rg)
            remaining.remove(inv)
            continue
        raise NoDecomposition(f"root {rg} of g matches no root of f up to inversion")
    if remaining:
        raise NoDecomposition("unmatched roots of f")
    v = _poly_from_roots(same, lead=complex(g0.lead))
    u = _poly_from_roots(opposite)
    # verify: g = t^l2 v u
    gv = _poly_mul(v, u)
    g_target = [complex(c) for c in g0.coeffs]
    if max(abs(a - b) for a, b in zip(gv, g_target)) > tol * max(1, abs(g0.lead)):
        raise NoDecomposition("g-identity verification failed")
    # verify: f = sign t^l1 v(t) u(1/t) t^{deg u}
    fu = _poly_mul(v, _reverse_poly(u))
    f_target = [complex(c) for c in f0.coeffs]
    sign = None
    for s in (1, -1):
        if len(fu) == len(f_target) and max(
            abs(s * a - b) for a, b in zip(fu, f_target)
        ) <= tol * max(1.0, abs(f0.lead)):
            sign = s
            break
    if sign is None:
        raise NoDecomposition("f-identity verification failed")
    integral = True
    u_out, v_out = [], []
    for seq, out in ((u, u_out), (v, v_out)):
        for c in seq:
            ri = round(c.real)
            if abs(c.real - ri) < 1e-9 and abs(c.imag) < 1e-9:
                out.append(ri)
            else:
                out.append(c)
                integral = False
    if integral:
        # exact re-verification over the integers
        ui = IntPoly(u_out)
        vi = IntPoly(v_out)
        gv_i = vi.mul(ui)
        fu_i = vi.mul(IntPoly(list(reversed(ui.coeffs))))
        if tuple(gv_i.coeffs) != g0.coeffs or tuple(
            sign * c for c in fu_i.coeffs
        ) != f0.coeffs:
            integral = False
    return HillarDecomposition(
        u=tuple(u_out), v=tuple(v_out), l1=l1, l2=l2, sign=sign, integral=integral
    )


# ----------------------------------------------------------------------------
# Exceptional units
# ----------------------------------------------------------------------------

@dataclass
class UnitScan:
    """Unit indices n <= M with |N(1 - u^n)| = 1, all norms exact.

    E0 is the length of the initial run (Stewart); the count of unit
    indices within the scan bound is a LOWER bound for Silverman's E(u):
    Siegel's finiteness gives no effective bound, so the scan never claims
    exhaustiveness."""

    minpoly: IntPoly
    E0: int
    unit_indices: list
    M: int
    norms: list  # N(1 - u^n) for n = 1..M, signed and exact

    @property
    def count_within_bound(self) -> int:
        return len(self.unit_indices)


def exceptional_scan(minpoly: IntPoly, M: int) -> UnitScan:
    """Scan n = 1..M for unit values of 1 - u^n, exactly.

    N(1 - u^n) = prod_i (1 - u_i^n) = +-Res(minpoly, t^n - 1) for a monic
    minimal polynomial; n is a unit index iff the absolute norm is 1.
    Requires |lc| = |constant| = 1 (an algebraic unit) and a non-torsion u
    (no cyclotomic minimal polynomial)."""
    if minpoly.degree < 1:
        raise NotAUnit("constant polynomial")
    if abs(minpoly.lead) != 1 or abs(minpoly.coeffs[0]) != 1:
        raise NotAUnit("minimal polynomial of a unit needs |lc| = |const| = 1")
    prof = profile_of(minpoly)
    if any(r.kind == ROOT_OF_UNITY for r in prof.roots):
        raise NotAUnit("torsion unit (cyclotomic factor present)")
    norms = cyclic_resultants(minpoly, M)
    unit_indices = []
    for n, r in enumerate(norms, start=1):
        if abs(r) == 1:
            # float cross-check: the norm should be moderate when exact is 1
            fl = 1.0
            for rec in prof.roots:
                fl *= abs(1 - rec.value ** n) ** rec.multiplicity
            if not 0.5 < fl * prof.leading_abs ** n < 2.0:
                raise ArithmeticError(
                    f"norm cross-check failed at n={n}: exact 1 vs float {fl}"
                )
            unit_indices.append(n)
    e0 = 0
    for n in range(1, M + 1):
        if n in unit_indices:
            e0 = n
        else:
            break
    return UnitScan(minpoly=minpoly, E0=e0, unit_indices=unit_indices, M=M,
                    norms=norms)


def g_u_continued(minpoly: IntPoly, z: complex, degree_multiplier: int = 1,
                  params: ContinuationParams | None = None) -> EvalResult:
    """Continuation of G_u(z) = sum log N(1 - u^r) z^r for a unit u with no
    unimodular Galois conjugate; for K strictly containing Q(u), norms scale
    by [K : Q(u)] = degree_multiplier, so the z/(z-1)^2 coefficient is
    degree_multiplier * log M(u)."""
    prof = profile_of(minpoly)
    if any(r.kind in (ROOT_OF_UNITY, DIOPHANTINE) for r in prof.roots):
        raise UnimodularConjugate(
            "some Galois conjugate lies on the unit circle"
        )
    base = continued_from_profile(prof, z, params)
    return EvalResult(degree_multiplier * base.value,
                      degree_multiplier * base.tail_bound,
                      base.terms_used)


def hankel_recurrence_witness(sequence, max_order: int = 8):
    """Per order k <= max_order, the best (max over window starts) minimal
    singular value of the k x k Hankel matrices over the sequence.

    A linear recurrence of order < k would make every k-window singular, so
    a value above threshold at each k witnesses that no recurrence of order
    < max_order fits the data."""
    seq = np.asarray(sequence, dtype=np.float64)
    out = {}
    for k in range(1, max_order + 1):
        best = 0.0
        for start in range(0, len(seq) - (2 * k - 1) + 1):
            h = np.array([[seq[start + i + j] for j in range(k)] for i in range(k)])
            best = max(best, float(np.linalg.svd(h, compute_uv=False)[-1]))
        out[k] = best
    return out
