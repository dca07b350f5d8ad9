"""CSV implementation of MatrixStorePort (comma separated, no header, LF endings)."""

import logging
from pathlib import Path

import numpy as np
import numpy.typing as npt

from ...domain.models.exceptions import DimensionError, SchemaError, SweepIOError
from ...domain.models.matrix import DenseMatrix, FloatArray
from ...domain.ports.matrix_store_port import MatrixStorePort

logger = logging.getLogger(__name__)

# Shortest printf format that round-trips a float64 exactly
FLOAT_FORMAT = "%.17g"


class CsvMatrixStore(MatrixStorePort):
    """One matrix row per line; dimensions are inferred from the file."""

    def read_matrix(self, path: Path) -> DenseMatrix:
        values = self._load(path)
        try:
            return DenseMatrix(values)
        except DimensionError as e:
            raise SchemaError(f"{path}: {e}") from e

    def read_vector(self, path: Path) -> FloatArray:
        """Load a vector stored as one row or one column."""
        values = self._load(path)
        if min(values.shape) != 1:
            raise SchemaError(f"{path}: expected a vector, got shape {values.shape}")
        vector = values.reshape(-1)
        if not np.all(np.isfinite(vector)):
            raise SchemaError(f"{path}: non-finite entries")
        return vector

    def write_matrix(self, path: Path, matrix: DenseMatrix) -> None:
        self._save(path, matrix.values)

    def write_vector(self, path: Path, vector: npt.ArrayLike) -> None:
        """Write a vector as a single column."""
        self._save(path, np.asarray(vector, dtype=np.float64).reshape(-1, 1))

    def _load(self, path: Path) -> FloatArray:
        try:
            with open(path, encoding="utf-8") as handle:
                return np.loadtxt(handle, delimiter=",", dtype=np.float64, ndmin=2)
        except OSError as e:
            raise SweepIOError(f"Cannot read {path}: {e}") from e
        except ValueError as e:
            raise SchemaError(f"{path}: {e}") from e

    def _save(self, path: Path, values: FloatArray) -> None:
        try:
            np.savetxt(path, values, delimiter=",", fmt=FLOAT_FORMAT, newline="\n")
        except OSError as e:
            raise SweepIOError(f"Cannot write {path}: {e}") from e
        logger.debug(f"Wrote {values.shape} array to {path}")
