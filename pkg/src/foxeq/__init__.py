"""foxeq: Fox's integral equation, zeta zero sums and a harness of numerical identity checks."""
from .errors import (
    AccuracyError,
    DomainError,
    FoxError,
    PoleError,
    PrecisionError,
    ResourceError,
    SingularConfigurationError,
    SymmetryError,
    ZeroTableError,
    ZeroTableFormatError,
    ZeroValidationError,
)

__version__ = "0.1.0"
