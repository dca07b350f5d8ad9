"""CSV implementation of RecordStorePort."""

import contextlib
import csv
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from ...domain.models.exceptions import SchemaError, SweepIOError
from ...domain.models.experiment import (
    AGGREGATE_COLUMNS,
    RECORD_COLUMNS,
    AggregateRow,
    ExperimentRecord,
)
from ...domain.ports.record_store_port import RecordStorePort

logger = logging.getLogger(__name__)


def format_cell(value: Any) -> str:
    """Render one CSV cell: empty for None, shortest round-trip repr for floats."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if hasattr(value, "value"):
        return str(value.value)
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


class CsvRecordStore(RecordStorePort):
    """Writes UTF-8, LF-terminated CSV files with a fixed header.

    A failed write removes the partial file before raising SweepIOError.
    """

    def write_records(self, path: Path, records: list[ExperimentRecord]) -> None:
        self._write(path, RECORD_COLUMNS, records)
        logger.info(f"Wrote {len(records)} records to {path}")

    def write_aggregates(self, path: Path, rows: list[AggregateRow]) -> None:
        self._write(path, AGGREGATE_COLUMNS, rows)
        logger.info(f"Wrote {len(rows)} aggregate rows to {path}")

    def read_aggregates(self, path: Path) -> list[AggregateRow]:
        try:
            with open(path, encoding="utf-8", newline="") as handle:
                reader = csv.DictReader(handle)
                header = reader.fieldnames
                if not header:
                    raise SchemaError(f"{path} is empty")
                missing = [column for column in AGGREGATE_COLUMNS if column not in header]
                if missing:
                    raise SchemaError(f"{path} lacks columns: {', '.join(missing)}")
                raw_rows = list(reader)
        except OSError as e:
            raise SweepIOError(f"Cannot read {path}: {e}") from e

        if not raw_rows:
            raise SchemaError(f"{path} has a header but no rows")

        rows = []
        for line_number, raw in enumerate(raw_rows, start=2):
            fields = {column: (raw[column] or None) for column in AGGREGATE_COLUMNS}
            try:
                rows.append(AggregateRow(**fields))
            except ValidationError as e:
                raise SchemaError(f"{path}:{line_number}: {e}") from e
        return rows

    def _write(
        self, path: Path, columns: Sequence[str], models: Iterable[BaseModel]
    ) -> None:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="") as handle:
                writer = csv.writer(handle, lineterminator="\n")
                writer.writerow(columns)
                for model in models:
                    writer.writerow([format_cell(getattr(model, column)) for column in columns])
        except OSError as e:
            logger.error(f"Writing {path} failed: {e}")
            with contextlib.suppress(OSError):
                path.unlink(missing_ok=True)
            raise SweepIOError(f"Cannot write {path}: {e}") from e
