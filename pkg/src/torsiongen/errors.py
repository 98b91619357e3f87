"""Exception types shared across the package."""


class TorsiongenError(Exception):
    """Base class for all package errors."""


class ZeroInput(TorsiongenError):
    """An operation received the zero value where nonzero is required."""


class NonConvergence(TorsiongenError):
    """Iterative root finding stopped at max iterations.

    Carries the best residual seen so the caller can judge how bad it is.
    """

    def __init__(self, message, best_residual=None):
        super().__init__(message)
        self.best_residual = best_residual


class PrecisionExhausted(TorsiongenError):
    """Fewer reliable continued-fraction terms than requested.

    ``reliable_terms`` is how many terms were certain; ``partial`` holds them.
    """

    def __init__(self, reliable_terms, partial=None):
        super().__init__(f"only {reliable_terms} reliable partial quotients")
        self.reliable_terms = reliable_terms
        self.partial = partial


class PoleHit(TorsiongenError):
    """Evaluation requested at (or too close to) a pole."""

    def __init__(self, location, generator=None, exponent=None):
        super().__init__(f"evaluation at pole {location}")
        self.location = location
        self.generator = generator
        self.exponent = exponent


class NaturalBoundary(TorsiongenError):
    """Continuation demanded for a function whose unit circle is a natural boundary."""

    def __init__(self, diophantine_roots):
        roots = list(diophantine_roots)
        super().__init__(
            f"no continuation beyond the unit circle: diophantine roots {roots}"
        )
        self.diophantine_roots = roots


class NotAPole(TorsiongenError):
    """Residue requested at a point where the limit vanishes."""


class InvalidExponent(TorsiongenError):
    """Exponent outside the admissible range (e.g. m in Z_<=0 for S_m)."""


class NonzeroMean(TorsiongenError):
    """Periodic function has a nonzero mean, so L(1, f) does not converge."""


class PoleOfGamma(TorsiongenError):
    """Digamma evaluated at a non-positive integer."""


class ZeroResultant(TorsiongenError):
    """A cyclic resultant vanished where nonvanishing was required."""

    def __init__(self, m):
        super().__init__(f"cyclic resultant vanishes at m={m}")
        self.m = m


class NoDecomposition(TorsiongenError):
    """No Hillar (u, v) factor pair exists for the given polynomials."""


class OutOfScope(TorsiongenError):
    """Input violates the restricted hypotheses this implementation supports."""


class NotAUnit(TorsiongenError):
    """Polynomial is not the minimal polynomial of a non-torsion algebraic unit."""


class UnimodularConjugate(TorsiongenError):
    """A Galois conjugate lies on the unit circle, breaking the continuation hypothesis."""


class RootOfUnityCollision(TorsiongenError):
    """Some polynomial in an alternating product has an r-th root of unity root."""


class AmbiguousGenerators(TorsiongenError):
    """Pole power-coincidences collide within tolerance; generators not identifiable."""
