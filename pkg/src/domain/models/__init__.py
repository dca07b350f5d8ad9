"""Domain models package."""

from .error_codes import ErrorCode
from .exceptions import (
    ConfigurationError,
    ConstructionError,
    DegenerateSampleError,
    DimensionError,
    InsufficientSamplesError,
    InvalidProblemError,
    InvalidTargetError,
    MetricUndefinedError,
    SchemaError,
    ShrinkLPError,
    SweepIOError,
)
from .experiment import (
    AggregateRow,
    ExperimentConfig,
    ExperimentRecord,
    Method,
    RecordStatus,
    SweepCell,
    SweepMode,
)
from .matrix import CovarianceKind, CovarianceSpec, DenseMatrix
from .observation import NoiseTag, ObservationSet
from .problem import ConstrainedProblem, Solution, SolveStatus
from .scenario import NoiseModel, ProblemInstance, RngStream, ScenarioSpec
from .shrinkage import CoefficientKind, ShrinkageCoefficients, TargetKind, TargetMatrix

__all__ = [
    "DenseMatrix",
    "CovarianceKind",
    "CovarianceSpec",
    "ObservationSet",
    "NoiseTag",
    "ShrinkageCoefficients",
    "CoefficientKind",
    "TargetMatrix",
    "TargetKind",
    "ConstrainedProblem",
    "Solution",
    "SolveStatus",
    "ScenarioSpec",
    "NoiseModel",
    "RngStream",
    "ProblemInstance",
    "ExperimentConfig",
    "ExperimentRecord",
    "AggregateRow",
    "SweepCell",
    "SweepMode",
    "Method",
    "RecordStatus",
    "ErrorCode",
    "ShrinkLPError",
    "DimensionError",
    "ConstructionError",
    "InsufficientSamplesError",
    "DegenerateSampleError",
    "InvalidTargetError",
    "InvalidProblemError",
    "MetricUndefinedError",
    "SchemaError",
    "ConfigurationError",
    "SweepIOError",
]
