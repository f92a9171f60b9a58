"""Exception types shared across the package."""


class SpinScatterError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SpinScatterError, ValueError):
    """Invalid quantum numbers or out-of-domain numeric input."""


class DivergenceError(SpinScatterError, ValueError):
    """Requested design point sits on (or too close to) a divergence."""


class SingularityError(SpinScatterError, ZeroDivisionError):
    """A closed-form denominator vanished."""


class CompositionError(SpinScatterError, ValueError):
    """Geometric-series resolvent is singular."""


class DegenerateConfigurationError(SpinScatterError, RuntimeError):
    """Scattering matching system is numerically degenerate."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class BlockStructureError(SpinScatterError, ValueError):
    """Matrix does not commute with the conserved operators it should."""


class DesignError(SpinScatterError, ValueError):
    """Register design request cannot be satisfied."""


class ThresholdError(DesignError):
    """Coupling below the minimum value required for a SWAP design."""
