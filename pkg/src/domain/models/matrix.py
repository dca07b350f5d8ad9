"""Dense matrix domain model."""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from .exceptions import DimensionError

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Row-major real matrix with finite float64 entries.

    Value object - the wrapped array is copied on construction and
    marked read-only, so instances can be shared between threads.
    """

    values: FloatArray

    def __post_init__(self) -> None:
        array = np.array(self.values, dtype=np.float64, order="C", copy=True)
        if array.ndim != 2:
            raise DimensionError(f"DenseMatrix needs a 2-D array, got {array.ndim}-D")
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise DimensionError(f"DenseMatrix needs positive dimensions, got {array.shape}")
        if not np.all(np.isfinite(array)):
            raise DimensionError("DenseMatrix entries must be finite")
        array.setflags(write=False)
        object.__setattr__(self, "values", array)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "DenseMatrix":
        """Build a matrix from nested row sequences."""
        return cls(np.asarray(rows, dtype=np.float64))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(np.zeros((rows, cols)))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls(np.ones((rows, cols)))

    @classmethod
    def identity(cls, size: int) -> "DenseMatrix":
        return cls(np.eye(size))

    @property
    def rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def cols(self) -> int:
        return int(self.values.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> FloatArray:
        """Row-major flat view of the entries."""
        return self.values.reshape(-1)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.values.T)

    def scaled(self, factor: float) -> "DenseMatrix":
        return DenseMatrix(factor * self.values)

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"Cannot add {self.shape} and {other.shape}")
        return DenseMatrix(self.values + other.values)

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.shape != other.shape:
            raise DimensionError(f"Cannot subtract {other.shape} from {self.shape}")
        return DenseMatrix(self.values - other.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash((self.shape, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"DenseMatrix(rows={self.rows}, cols={self.cols})"


class CovarianceKind(str, Enum):
    """Construction recipes for a symmetric positive-definite square root."""

    IDENTITY_SCALED = "identity_scaled"
    DIAGONAL = "diagonal"
    DENSE_WELL_CONDITIONED = "dense_well_conditioned"


@dataclass(frozen=True)
class CovarianceSpec:
    """Recipe for the square root R of a noise covariance Sigma = R @ R.

    Attributes:
        kind: Construction recipe
        scale: Multiplier applied to the whole root (sigma for identity_scaled)
        diagonal: Fixed diagonal entries for the diagonal recipe; drawn from
            [low, high] when omitted
        low: Lower bound of random diagonal entries
        high: Upper bound of random diagonal entries
        max_condition: Cap on cond(Sigma) for the dense recipe
    """

    kind: CovarianceKind = CovarianceKind.IDENTITY_SCALED
    scale: float = 1.0
    diagonal: tuple[float, ...] | None = None
    low: float = 0.5
    high: float = 1.5
    max_condition: float = 100.0

    @classmethod
    def identity_scaled(cls, sigma: float) -> "CovarianceSpec":
        return cls(kind=CovarianceKind.IDENTITY_SCALED, scale=sigma)

    @classmethod
    def diagonal_entries(cls, entries: Sequence[float]) -> "CovarianceSpec":
        return cls(kind=CovarianceKind.DIAGONAL, diagonal=tuple(float(e) for e in entries))

    @classmethod
    def diagonal_range(cls, low: float, high: float) -> "CovarianceSpec":
        return cls(kind=CovarianceKind.DIAGONAL, low=low, high=high)

    @classmethod
    def dense_well_conditioned(cls, scale: float = 1.0) -> "CovarianceSpec":
        return cls(kind=CovarianceKind.DENSE_WELL_CONDITIONED, scale=scale)
