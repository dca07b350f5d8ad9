"""Sweep result DTO."""

from dataclasses import dataclass, field
from pathlib import Path

from ...domain.models.experiment import RecordStatus

# Above this share of solver failures the CLI exits with code 3
FAILURE_RATE_LIMIT = 0.10


@dataclass
class SweepSummary:
    """Files and outcome counts of a finished sweep."""

    records_path: Path
    aggregates_path: Path
    record_count: int
    status_counts: dict[RecordStatus, int] = field(default_factory=dict)

    @property
    def solver_failures(self) -> int:
        return sum(count for status, count in self.status_counts.items() if status.is_solver_failure())

    @property
    def failure_rate(self) -> float:
        if self.record_count == 0:
            return 0.0
        return self.solver_failures / self.record_count

    @property
    def exceeds_failure_limit(self) -> bool:
        return self.failure_rate > FAILURE_RATE_LIMIT
