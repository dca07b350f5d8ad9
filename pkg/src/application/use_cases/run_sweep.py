"""Monte-Carlo sweep over (c, p, sigma) cells."""

import contextlib
import logging
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import groupby, repeat
from pathlib import Path

from ...domain.models.exceptions import SweepIOError
from ...domain.models.experiment import ExperimentConfig, ExperimentRecord, SweepCell
from ...domain.ports.record_store_port import RecordStorePort
from ...domain.services.metrics import aggregate_records
from ..dto.sweep_dto import SweepSummary
from .run_replication import RunReplicationUseCase

logger = logging.getLogger(__name__)


def aggregates_path_for(records_path: Path) -> Path:
    """results.csv -> results_agg.csv"""
    return records_path.with_name(f"{records_path.stem}_agg{records_path.suffix or '.csv'}")


class RunSweepUseCase:
    """Run every replication of every cell and write records plus aggregates.

    Replications are independent tasks; with workers > 1 they run in a
    process pool. Records are sorted by key before writing, so files do
    not depend on scheduling.
    """

    def __init__(self, replication: RunReplicationUseCase, record_store: RecordStorePort):
        self.replication = replication
        self.record_store = record_store

    def execute(self, config: ExperimentConfig) -> SweepSummary:
        """Run the sweep.

        Raises:
            SweepIOError: If an output file cannot be written; partial files
                are removed first
        """
        cells = config.cells()
        tasks = [(cell, rep) for cell in cells for rep in range(config.reps)]
        logger.info(
            f"Sweep of {len(cells)} cells x {config.reps} reps "
            f"({len(tasks) * config.methods_per_replication} records) with {config.workers} worker(s)"
        )

        records = sorted(self._run(tasks, config), key=ExperimentRecord.sort_key)
        status_counts = Counter(record.status for record in records)

        records_path = Path(config.output_path)
        aggregates_path = aggregates_path_for(records_path)
        aggregates = aggregate_records(records)
        for row in aggregates:
            if row.excluded:
                logger.warning(
                    f"{row.excluded} of {row.runs + row.excluded} {row.series_label} records excluded "
                    f"at c={row.c:g}, p={row.p}, sigma={row.sigma:g}"
                )

        self.record_store.write_records(records_path, records)
        try:
            self.record_store.write_aggregates(aggregates_path, aggregates)
        except SweepIOError:
            with contextlib.suppress(OSError):
                records_path.unlink(missing_ok=True)
            raise

        summary = SweepSummary(
            records_path=records_path,
            aggregates_path=aggregates_path,
            record_count=len(records),
            status_counts=dict(status_counts),
        )
        logger.info(
            f"Sweep finished: {summary.record_count} records, "
            f"solver failure rate {summary.failure_rate:.1%}"
        )
        return summary

    def _run(
        self, tasks: list[tuple[SweepCell, int]], config: ExperimentConfig
    ) -> Iterator[ExperimentRecord]:
        cells = [cell for cell, _ in tasks]
        reps = [rep for _, rep in tasks]
        if config.workers > 1:
            with ProcessPoolExecutor(max_workers=config.workers) as executor:
                batches = executor.map(
                    self.replication.execute,
                    cells,
                    reps,
                    repeat(config),
                    chunksize=max(1, len(tasks) // (4 * config.workers)),
                )
                yield from self._log_progress(tasks, batches, config)
        else:
            batches = map(self.replication.execute, cells, reps, repeat(config))
            yield from self._log_progress(tasks, batches, config)

    @staticmethod
    def _log_progress(
        tasks: list[tuple[SweepCell, int]],
        batches: Iterator[list[ExperimentRecord]],
        config: ExperimentConfig,
    ) -> Iterator[ExperimentRecord]:
        results = zip(tasks, batches)
        for cell, group in groupby(results, key=lambda item: item[0][0]):
            for _, batch in group:
                yield from batch
            logger.info(f"Finished cell c={cell.c:g} p={cell.p} sigma={cell.sigma:g} ({config.reps} reps)")
