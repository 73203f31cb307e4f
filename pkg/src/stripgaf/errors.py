"""Exception types shared across the package."""


class StripGafError(Exception):
    """Base class for all package errors."""


class DomainError(StripGafError, ValueError):
    """Argument lies outside the strip or violates an operation's precondition."""


class NumericError(StripGafError, ArithmeticError):
    """Quadrature or evaluation produced non-finite or untrustworthy values."""


class SizeError(StripGafError):
    """A grid would exceed the configured maximum size."""


class CondL2Error(StripGafError):
    """The square-integrability condition fails where it is required."""


class ConvergenceError(StripGafError):
    """A root bracket or iterative scheme failed to converge."""


class BoundaryZeroError(StripGafError):
    """The function (nearly) vanishes on a counting contour."""


class RefinementLimitError(StripGafError):
    """Adaptive contour subdivision exceeded its depth limit."""


class InsufficientDataError(StripGafError):
    """Not enough data points for a requested fit."""


class ConfigError(StripGafError):
    """Malformed measure descriptor or experiment configuration."""
