"""Exception types shared across the package."""


class ThermofieldError(Exception):
    """Base class for package-specific errors."""


class ShapeError(ThermofieldError, ValueError):
    """Operands have incompatible shapes or kinds."""


class DimensionError(ThermofieldError, ValueError):
    """A result would exceed the configured dimension budget."""


class DomainError(ThermofieldError, ValueError):
    """A parameter or input lies outside the mathematical domain of the map."""


class ContractError(ThermofieldError, ValueError):
    """An input violates a documented contract (typically normalization)."""


class TruncationError(ThermofieldError):
    """The Fock cutoff is too small for the requested construction."""


class ConsistencyError(ThermofieldError):
    """Two evaluation paths that must agree disagree beyond tolerance."""


class ConfigError(ThermofieldError, ValueError):
    """An experiment configuration is invalid or unsupported."""


class InvalidDensityError(ThermofieldError, ValueError):
    """A matrix fails to be a valid density operator."""


class UndefinedMeanError(ThermofieldError):
    """Mandel Q is undefined because the mean occupation vanishes.

    Carries the raw moments so callers can still inspect them.
    """

    def __init__(self, message: str, mean: float, second_factorial: float):
        super().__init__(message)
        self.mean = mean
        self.second_factorial = second_factorial


class TruncationWarning(UserWarning):
    """A truncated construction dropped more weight than the threshold."""
