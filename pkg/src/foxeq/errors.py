"""Exception hierarchy shared by every foxeq module."""


class FoxError(Exception):
    """Base class for all foxeq failures."""


class DomainError(FoxError, ValueError):
    """An argument lies outside the region where an operation is defined."""


class PoleError(DomainError):
    """The argument hits a pole of the function being evaluated."""


class PrecisionError(FoxError, ArithmeticError):
    """Cancellation in a series would exceed the double-precision budget.

    ``estimated_loss`` is the absolute rounding error the evaluation would
    have carried.
    """

    def __init__(self, message, estimated_loss=float("nan")):
        super().__init__(message)
        self.estimated_loss = estimated_loss


class AccuracyError(FoxError, ArithmeticError):
    """A quadrature did not reach its tolerance.

    The best available estimate is attached so callers can still report it.
    """

    def __init__(self, message, best_estimate=float("nan"), error_estimate=float("inf")):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class SymmetryError(FoxError):
    """A contour integral that must be real came back with an imaginary part."""


class SingularConfigurationError(FoxError):
    """The Mellin-domain denominator of a Fox equation vanishes."""


class ZeroTableError(FoxError):
    """Base class for zero-table ingestion problems."""


class ZeroTableFormatError(ZeroTableError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ZeroValidationError(ZeroTableError):
    def __init__(self, message, ordinate=None):
        super().__init__(message)
        self.ordinate = ordinate


class ResourceError(FoxError):
    """A check needs a resource (e.g. the zero table) that was not supplied."""
