"""Exception types shared across the package."""


class NumericOverflowError(ArithmeticError):
    """Non-finite values appeared during a numerical integration step."""


class SpectralRadiusError(RuntimeError):
    """Power iteration did not converge; carries the last estimate."""

    def __init__(self, message: str, last_estimate: float):
        super().__init__(message)
        self.last_estimate = last_estimate


class SingularSystemError(RuntimeError):
    """The normal-equation system could not be factorized."""


class DataAvailabilityError(RuntimeError):
    """Ground truth was required (e.g. for assimilation) but not available."""


class UndefinedMetricError(ValueError):
    """A metric was requested on inputs where it is undefined."""


class ConfigError(ValueError):
    """Invalid configuration: unknown key, bad type, or out-of-range value."""


class DatasetFormatError(ValueError):
    """A dataset or checkpoint file failed format validation."""
