"""Exception and warning types shared across the package."""


class PoleError(ValueError):
    """An argument sits on a pole (Gamma, Barnes G or an explicit denominator)."""


class SectorMismatch(ValueError):
    """Two Fock vectors from different charge sectors were paired."""


class OrderingError(ValueError):
    """Contour radii violate the ordering required by an integrand."""


class DomainError(ValueError):
    """Input outside the domain where a formula or series is valid."""


class IdentityViolation(ArithmeticError):
    """A numerical identity failed beyond tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotCritical(ValueError):
    """An excitation integer lies outside both Fermi-edge windows."""


class MissingAmplitude(KeyError):
    """An operator amplitude table lacks the requested harmonic."""


class SingularKernel(ArithmeticError):
    """The Nystrom matrix is numerically singular."""


class ConvergenceError(ArithmeticError):
    """Grid refinement failed to stabilise a quantity."""


class RangeError(ValueError):
    """Evaluation point outside the interpolation range."""


class ConvergenceWarning(UserWarning):
    """A truncated series has a tail larger than the requested tolerance."""

    def __init__(self, message, last_shell=None):
        super().__init__(message)
        self.last_shell = last_shell
