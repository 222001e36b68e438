"""Exception types shared across the package.

Plain ZeroDivisionError is raised for inversion of (near-)zero quaternions;
everything else gets a named class so callers can tell a hypothesis failure
from an implementation bug.
"""


class QPBoundsError(Exception):
    """Base class for all package-specific errors."""


class DegenerateReal(QPBoundsError):
    """Imaginary part too small to define a unit imaginary direction."""


class HypothesisViolated(QPBoundsError):
    """A caller-asserted hypothesis does not hold for the given data."""


class SideMismatch(QPBoundsError):
    """Star product of polynomials with different coefficient sides."""


class SymmetrizationNotReal(QPBoundsError):
    """f * conj(f) produced a coefficient with non-negligible imaginary part.

    This indicates a bug in the star product, not bad input.
    """


class NonPositiveScale(QPBoundsError):
    """A scale parameter (rho or r) that must be positive is not."""


class ZeroLeading(QPBoundsError):
    """Leading coefficient has zero modulus where an inverse is required."""


class NonPositiveDiagonal(QPBoundsError):
    """Diagonal similarity requires strictly positive real entries."""


class BadIndices(QPBoundsError):
    """Index arguments (n, l, k, ...) outside their admissible range."""


class DegenerateAllZero(QPBoundsError):
    """All coefficients entering an optimization vanish; the bound degenerates."""


class NoConvergence(QPBoundsError):
    """Root iteration hit its sweep cap; carries the best iterate."""

    def __init__(self, message, roots=None, residuals=None):
        super().__init__(message)
        self.roots = list(roots) if roots is not None else []
        self.residuals = list(residuals) if residuals is not None else []


class OracleInconsistent(QPBoundsError):
    """The zero finder contradicted itself (lost or spurious candidate)."""


class SpecInvalid(QPBoundsError):
    """A generated family polynomial fails its own declared hypotheses."""


class SoundnessViolation(QPBoundsError):
    """A bound radius fell below the verified zero modulus; aborts emission."""
