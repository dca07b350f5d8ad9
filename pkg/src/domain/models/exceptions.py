"""Domain exceptions."""

from .error_codes import ErrorCode


class ShrinkLPError(Exception):
    """Base class for all library errors."""

    code: ErrorCode = ErrorCode.INTERNAL_ERROR

    def __init__(self, message: str, code: ErrorCode | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class DimensionError(ShrinkLPError, ValueError):
    """Matrices or vectors do not conform."""

    code = ErrorCode.DIMENSION_MISMATCH


class ConstructionError(ShrinkLPError):
    """A positive-definite square root could not be built."""

    code = ErrorCode.CONSTRUCTION_FAILED


class InsufficientSamplesError(ShrinkLPError, ValueError):
    """Fewer than two observation samples."""

    code = ErrorCode.INSUFFICIENT_SAMPLES


class DegenerateSampleError(ShrinkLPError):
    """Sample mean is numerically proportional to the target matrix."""

    code = ErrorCode.DEGENERATE_SAMPLE


class InvalidTargetError(ShrinkLPError, ValueError):
    """Target matrix is zero or has the wrong kind."""

    code = ErrorCode.INVALID_TARGET


class InvalidProblemError(ShrinkLPError, ValueError):
    """Constrained problem violates a solver precondition."""

    code = ErrorCode.INVALID_PROBLEM


class MetricUndefinedError(ShrinkLPError):
    """Relative objective requested against a zero reference objective."""

    code = ErrorCode.METRIC_UNDEFINED


class SchemaError(ShrinkLPError):
    """A CSV file lacks required columns or rows."""

    code = ErrorCode.SCHEMA_ERROR


class ConfigurationError(ShrinkLPError, ValueError):
    """Experiment configuration is invalid."""

    code = ErrorCode.CONFIGURATION_ERROR


class SweepIOError(ShrinkLPError):
    """Reading or writing an input or output file failed."""

    code = ErrorCode.IO_ERROR
