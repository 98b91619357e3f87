"""Dirichlet characters mod m, L(1, chi) for mean-zero periodic functions,
Fourier analysis on Z/m, and the identities expressing log|1 - zeta_m^l|
through special L-values at s = 1.

Characters are stored as exact exponent tables on generators of the unit
group and evaluated to complex on demand, which keeps the orthogonality
relations clean.  Principal-branch logarithms throughout.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NonzeroMean, PoleOfGamma

_TWO_PI = 2 * math.pi


# ----------------------------------------------------------------------------
# Periodic functions on Z/m with their Fourier data
# ----------------------------------------------------------------------------

@dataclass
class PeriodicFn:
    """A function on Z/m with its Fourier coefficients
    f_hat(n) = (1/m) sum_l f(l) e^{-2 pi i l n / m}."""

    modulus: int
    values: tuple
    fourier: tuple

    @classmethod
    def from_values(cls, values):
        values = tuple(complex(v) for v in values)
        m = len(values)
        fourier = tuple(np.fft.fft(np.asarray(values)) / m)
        return cls(m, values, tuple(complex(c) for c in fourier))

    @classmethod
    def from_fourier(cls, fourier):
        fourier = tuple(complex(v) for v in fourier)
        m = len(fourier)
        values = tuple(np.fft.ifft(np.asarray(fourier)) * m)
        return cls(m, tuple(complex(v) for v in values), fourier)

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    def check_inversion(self, tol: float = 1e-12) -> bool:
        back = np.fft.ifft(np.asarray(self.fourier)) * self.modulus
        return bool(np.max(np.abs(back - np.asarray(self.values))) < tol)


# ----------------------------------------------------------------------------
# Unit-group structure and characters
# ----------------------------------------------------------------------------

def _factorize(m: int):
    out = []
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root_mod_pk(p: int, k: int) -> int:
    """A generator of the cyclic group (Z/p^k)^x for odd p."""
    phi_p = p - 1
    factors = [q for q, _ in _factorize(phi_p)]
    g = None
    for cand in range(2, p):
        if all(pow(cand, phi_p // q, p) != 1 for q in factors):
            g = cand
            break
    if k == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


def _component_generators(p: int, k: int):
    """Generators with orders for (Z/p^k)^x."""
    if p == 2:
        if k == 1:
            return []
        if k == 2:
            return [(3, 2)]
        return [(2 ** k - 1, 2), (5, 2 ** (k - 2))]
    return [(_primitive_root_mod_pk(p, k), (p - 1) * p ** (k - 1))]


@dataclass
class DirichletCharacter:
    modulus: int
    exponents: tuple        # exponent on each unit-group generator
    values: tuple           # chi(0..m-1), 0 off the unit group
    is_principal: bool

    def __call__(self, n: int) -> complex:
        return self.values[n % self.modulus]

    def periodic_fn(self) -> PeriodicFn:
        return PeriodicFn.from_values(self.values)


@dataclass
class CharacterTable:
    modulus: int
    characters: list
    principal_index: int
    generator_orders: tuple

    @property
    def non_principal(self):
        return [c for i, c in enumerate(self.characters) if i != self.principal_index]


def characters(m: int) -> CharacterTable:
    """All phi(m) Dirichlet characters mod m (m <= 1000), via the exact
    cyclic decomposition of the unit group."""
    if not 1 <= m <= 1000:
        raise ValueError("modulus must be in 1..1000")
    comps = _factorize(m)
    gens = []          # (generator lifted mod m, order)
    comp_data = []     # (p**k, local generators with orders)
    for p, k in comps:
        pk = p ** k
        local = _component_generators(p, k)
        comp_data.append((pk, local))
        for g, order in local:
            # CRT lift: g in this component, 1 elsewhere
            residues = []
            for p2, k2 in comps:
                pk2 = p2 ** k2
                residues.append(g % pk2 if pk2 == pk else 1)
            lifted = _crt(residues, [p2 ** k2 for p2, k2 in comps])
            gens.append((lifted, order))
    orders = tuple(order for _, order in gens)

    # discrete logs for every unit (joint search within each component,
    # since (Z/2^k)^x needs two generators)
    dlogs = {}
    units = [a % m for a in range(1, m + 1) if math.gcd(a, m) == 1]
    for a in units:
        vec = []
        ok = True
        for (pk, local) in comp_data:
            if not local:
                continue
            combo = _joint_dlogs(a % pk, local, pk)
            if combo is None:
                ok = False
                break
            vec.extend(combo)
        if ok:
            dlogs[a] = tuple(vec)

    chars = []
    principal_index = 0
    n_chars = 1
    for o in orders:
        n_chars *= o
    for idx in range(max(n_chars, 1)):
        rem = idx
        exps = []
        for o in orders:
            exps.append(rem % o)
            rem //= o
        exps = tuple(exps)
        vals = [0j] * max(m, 1)
        for a, vec in dlogs.items():
            phase = Fraction(0)
            for e, x, o in zip(exps, vec, orders):
                phase += Fraction(e * x, o)
            vals[a] = cmath.exp(2j * math.pi * float(phase % 1))
        if all(e == 0 for e in exps):
            principal_index = idx
        chars.append(DirichletCharacter(m, exps, tuple(vals), all(e == 0 for e in exps)))
    return CharacterTable(m, chars, principal_index, orders)


def _crt(residues, moduli):
    x = 0
    M = 1
    for mod in moduli:
        M *= mod
    for r, mod in zip(residues, moduli):
        Mi = M // mod
        x += r * Mi * pow(Mi, -1, mod)
    return x % M


def _joint_dlogs(a: int, gens, mod: int):
    """Brute-force joint discrete log over a component's generator set."""
    from itertools import product

    ranges = [range(order) for _, order in gens]
    for combo in product(*ranges):
        v = 1
        for (g, _), e in zip(gens, combo):
            v = (v * pow(g, e, mod)) % mod
        if v == a % mod:
            return combo
    return None


# ----------------------------------------------------------------------------
# L(1, f) for mean-zero periodic f
# ----------------------------------------------------------------------------

def l_one_periodic(f: PeriodicFn) -> complex:
    """L(1, f) = sum f(n)/n for mean-zero periodic f, in closed form:
    -sum_{l=1}^{m-1} f_hat(l) log(1 - e^{2 pi i l/m}) (principal log)."""
    m = f.modulus
    if abs(f.fourier[0]) >= 1e-12:
        raise NonzeroMean(f"mean {f.fourier[0]} is not zero")
    total = 0j
    for l in range(1, m):
        c = f.fourier[l]
        if c == 0:
            continue
        total -= c * cmath.log(1 - cmath.exp(2j * math.pi * l / m))
    return total


def l_one_raw(f: PeriodicFn, base_blocks: int = 64, levels: int = 5) -> complex:
    """Raw Dirichlet partial sums of sum f(n)/n accelerated by Richardson
    extrapolation over period-aligned cutoffs N, 2N, 4N, ... (the tail of a
    mean-zero periodic series has a 1/N expansion)."""
    m = f.modulus
    if abs(f.fourier[0]) >= 1e-12:
        raise NonzeroMean(f"mean {f.fourier[0]} is not zero")
    vals = np.asarray(f.values)
    sums = []
    N0 = base_blocks * m
    Nmax = N0 * 2 ** (levels - 1)
    n = np.arange(1, Nmax + 1)
    terms = vals[np.mod(n, m)] / n
    cums = np.cumsum(terms)
    for j in range(levels):
        sums.append(complex(cums[N0 * 2 ** j - 1]))
    table = [sums]
    for lev in range(1, levels):
        prev = table[-1]
        table.append(
            [(2 ** lev * prev[i + 1] - prev[i]) / (2 ** lev - 1)
             for i in range(len(prev) - 1)]
        )
    return table[-1][0]


def log_abs_from_lvalues(m: int, l: int) -> float:
    """log|1 - zeta_m^l| reconstructed as -(1/2) L(1, f + conj f) for the
    periodic f with f_hat = delta_{l}; must equal the direct value."""
    if not 1 <= l <= m - 1:
        raise ValueError("need 1 <= l <= m-1")
    fourier = [0j] * m
    fourier[l] += 1
    fourier[(m - l) % m] += 1  # the conjugate's hat
    g = PeriodicFn.from_fourier(fourier)
    return (-0.5 * l_one_periodic(g)).real


# ----------------------------------------------------------------------------
# Digamma at rationals
# ----------------------------------------------------------------------------

def digamma_rational(u: int, v: int = 1, series_terms: int = 10 ** 6) -> float:
    """psi(u/v) + gamma via the reflection-free route: shift into (0, 1]
    with psi(z+1) = psi(z) + 1/z, then the series

        psi(z) + gamma = -1/z + z sum_{r>=1} 1/(r (r+z))

    summed to ``series_terms`` with a midpoint integral tail correction."""
    z = Fraction(u, v)
    if z.denominator == 1 and z <= 0:
        raise PoleOfGamma(f"psi has a pole at {z}")
    shift = 0.0
    while z > 1:
        z -= 1
        shift += 1.0 / float(z)
    while z <= 0:
        shift -= 1.0 / float(z)
        z += 1
    z0 = float(z)
    N = series_terms
    r = np.arange(1, N + 1, dtype=np.float64)
    s = float(np.sum(1.0 / (r * (r + z0))))
    s += math.log1p(z0 / (N + 0.5)) / z0
    return -1.0 / z0 + z0 * s + shift
