"""Exception types shared across the package."""


class CritpairError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CritpairError):
    """Input lies outside the mathematical domain of an operation."""


class PoleError(CritpairError):
    """Evaluation point coincides with a pole (a polynomial root)."""


class ConfigError(CritpairError):
    """Campaign or CLI configuration is invalid."""


class SingularError(CritpairError):
    """A matrix required to be invertible is (numerically) singular."""


class NearSingularError(CritpairError):
    """A scalar denominator fell below the safe-evaluation threshold."""


class EmptyDomain(CritpairError):
    """A region operation received an empty domain."""


class ConvergenceError(CritpairError):
    """An iterative solver failed to converge within its sweep budget.

    Carries the offending subset so callers can fall back to an oracle.
    """

    def __init__(self, message, points=None, residuals=None):
        super().__init__(message)
        self.points = points
        self.residuals = residuals
