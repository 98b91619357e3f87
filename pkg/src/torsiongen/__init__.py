"""torsiongen: torsion-homology generating functions and their continuations.

Given an integer polynomial (an Alexander polynomial, a cyclic-resultant
generator, or a unit minimal polynomial), this package computes the exact
branched-cover torsion orders, the explicit meromorphic continuation of the
log-torsion generating function, its pole/residue/Laurent data (Mahler
measure, growth slope), periodicity classification, ergodic boundary
averages in the natural-boundary regime, cyclic-resultant comparisons,
exceptional-unit counts, and the special L-value identities for
log|1 - zeta_m^l|.
"""

from .polyalg import IntPoly, classify_roots, resultant_exact, cyclotomic
from .kernels import BACKEND as KERNEL_BACKEND

__all__ = [
    "IntPoly",
    "classify_roots",
    "resultant_exact",
    "cyclotomic",
    "KERNEL_BACKEND",
]

__version__ = "0.1.0"
