"""Exception hierarchy shared by all modules."""


class SamuelConeError(Exception):
    """Base class for every error raised by this package."""


class InvalidDenominatorError(SamuelConeError, ZeroDivisionError):
    pass


class DimensionError(SamuelConeError, ValueError):
    """Vectors, generators or matrices of incompatible sizes."""


class EmptyIdealError(SamuelConeError, ValueError):
    pass


class DomainError(SamuelConeError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class HypothesisError(SamuelConeError, ValueError):
    """The radical hypothesis J ⊆ √I does not hold, so the Samuel limits are infinite."""


class UnsupportedDimensionError(SamuelConeError, ValueError):
    pass


class InsufficientDataError(SamuelConeError, ValueError):
    pass


class InconsistencyError(SamuelConeError, AssertionError):
    """An internal invariant failed; indicates a bug upstream rather than bad input."""
