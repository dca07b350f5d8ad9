"""Matrix file storage port interface."""

from abc import ABC, abstractmethod
from pathlib import Path

import numpy.typing as npt

from ..models.matrix import DenseMatrix, FloatArray


class MatrixStorePort(ABC):
    """Interface for reading and writing single matrices and vectors."""

    @abstractmethod
    def read_matrix(self, path: Path) -> DenseMatrix:
        """Read a matrix.

        Raises:
            SchemaError: If the content is not a finite rectangular table
            SweepIOError: If the file cannot be read
        """
        pass

    @abstractmethod
    def read_vector(self, path: Path) -> FloatArray:
        pass

    @abstractmethod
    def write_matrix(self, path: Path, matrix: DenseMatrix) -> None:
        pass

    @abstractmethod
    def write_vector(self, path: Path, vector: npt.ArrayLike) -> None:
        pass
