"""Experiment record storage port interface."""

from abc import ABC, abstractmethod
from pathlib import Path

from ..models.experiment import AggregateRow, ExperimentRecord


class RecordStorePort(ABC):
    """Interface for persisting sweep records and their aggregates."""

    @abstractmethod
    def write_records(self, path: Path, records: list[ExperimentRecord]) -> None:
        """Write raw records in the given order.

        Args:
            path: Destination file
            records: Records, already sorted
        """
        pass

    @abstractmethod
    def write_aggregates(self, path: Path, rows: list[AggregateRow]) -> None:
        """Write per-cell aggregate rows.

        Args:
            path: Destination file
            rows: Aggregate rows, already sorted
        """
        pass

    @abstractmethod
    def read_aggregates(self, path: Path) -> list[AggregateRow]:
        """Read aggregate rows back.

        Args:
            path: Source file

        Returns:
            Parsed rows

        Raises:
            SchemaError: If the file is empty or lacks required columns
        """
        pass
