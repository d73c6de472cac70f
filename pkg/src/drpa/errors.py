"""Exception types shared across the package.

The CLI maps these onto exit codes: ConfigError -> 1, any other
DrpaError -> 2, OSError -> 3.
"""


class DrpaError(Exception):
    """Base class for all package errors."""


class ConfigError(DrpaError, ValueError):
    """Invalid model or experiment configuration."""


class InvalidInputError(DrpaError, ValueError):
    """Malformed input to a metric or analysis function."""


class InvalidHistoryError(DrpaError, ValueError):
    """Degree history violates monotonicity (past degree above current)."""


class UnknownNodeError(DrpaError, KeyError):
    """Node id not present in the network."""


class DegenerateWeightsError(DrpaError, ArithmeticError):
    """Attachment weights sum to zero; no valid target exists."""


class DegenerateSampleError(DrpaError, ValueError):
    """Sample has no spread (all values equal), so the fit is undefined."""


class InsufficientDataError(DrpaError, ValueError):
    """Too few points to support a tail fit."""


class InvalidComparisonError(DrpaError, ValueError):
    """Likelihood-ratio comparison between models fitted on different tails."""


class UndefinedTestError(DrpaError, ArithmeticError):
    """Likelihood-ratio test variance is zero; p-value undefined."""


class SingularStateError(DrpaError, ArithmeticError):
    """ODE state has a vanishing weight denominator."""


class StepSizeError(DrpaError, ArithmeticError):
    """Integrator step violated a state constraint; retry with smaller dt."""


class SingularParametersError(DrpaError, ArithmeticError):
    """Closed-form selection probability has a zero denominator."""


class IncompleteReportError(DrpaError, ValueError):
    """Aggregate report lacks the data required for an emission."""
