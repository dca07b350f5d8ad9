"""Tests for RunSweepUseCase."""

from pathlib import Path

import pytest

from src.adapters.persistence.record_csv_repository import CsvRecordStore
from src.application.use_cases.run_replication import RunReplicationUseCase
from src.application.use_cases.run_sweep import RunSweepUseCase, aggregates_path_for
from src.domain.models.exceptions import SweepIOError
from src.domain.models.experiment import ExperimentRecord, Method, RecordStatus
from src.domain.models.problem import Solution, SolveStatus
from src.domain.ports.lp_solver_port import LPSolverPort
from src.domain.ports.record_store_port import RecordStorePort


@pytest.mark.unit
class TestRunSweepUseCase:
    """Test sweeps over a tiny grid."""

    def test_aggregates_path_for(self, tmp_path):
        """Test the aggregate file sits next to the records file."""
        assert aggregates_path_for(tmp_path / "results.csv") == tmp_path / "results_agg.csv"
        assert aggregates_path_for(tmp_path / "out") == tmp_path / "out_agg.csv"

    def test_records_sorted_and_complete(self, tiny_config, lp_solver, robust_solver, mocker):
        """Test one record per (cell, rep, method) in key order."""
        record_store = mocker.Mock(spec=RecordStorePort)
        use_case = RunSweepUseCase(RunReplicationUseCase(lp_solver, robust_solver), record_store)

        summary = use_case.execute(tiny_config)

        records = record_store.write_records.call_args.args[1]
        assert summary.record_count == len(records) == 2 * 1 * 2 * 3
        assert records == sorted(records, key=ExperimentRecord.sort_key)
        assert [r.p for r in records[:6]] == [6] * 6
        assert [(r.rep, r.method) for r in records[:3]] == [
            (0, Method.NOMINAL),
            (0, Method.SHRINKAGE),
            (0, Method.ROBUST),
        ]
        assert summary.status_counts == {RecordStatus.OPTIMAL: 12}
        assert not summary.exceeds_failure_limit

        aggregates_path, aggregates = record_store.write_aggregates.call_args.args
        assert aggregates_path == aggregates_path_for(summary.records_path)
        assert len(aggregates) == 2 * 3
        assert all(row.runs == 2 and row.excluded == 0 for row in aggregates)

    def test_writes_both_files(self, tiny_config, lp_solver, robust_solver, record_store):
        """Test the records and aggregate CSV files are written."""
        summary = RunSweepUseCase(RunReplicationUseCase(lp_solver, robust_solver), record_store).execute(
            tiny_config
        )
        assert summary.records_path.exists()
        assert summary.aggregates_path.exists()
        assert len(summary.records_path.read_text(encoding="utf-8").splitlines()) == 13
        assert len(record_store.read_aggregates(summary.aggregates_path)) == 6

    def test_failure_rate(self, tiny_config, lp_solver, mocker):
        """Test failed robust solves count toward the failure rate."""
        robust_solver = mocker.Mock(spec=LPSolverPort)
        robust_solver.solve.return_value = Solution(status=SolveStatus.INFEASIBLE)
        record_store = mocker.Mock(spec=RecordStorePort)

        summary = RunSweepUseCase(RunReplicationUseCase(lp_solver, robust_solver), record_store).execute(
            tiny_config
        )

        assert summary.status_counts[RecordStatus.INFEASIBLE] == 4
        assert summary.solver_failures == 4
        assert summary.failure_rate == pytest.approx(4 / 12)
        assert summary.exceeds_failure_limit
        aggregates = record_store.write_aggregates.call_args.args[1]
        robust_rows = [row for row in aggregates if row.method is Method.ROBUST]
        assert all(row.runs == 0 and row.excluded == 2 and row.rel_obj is None for row in robust_rows)

    def test_aggregate_write_failure_removes_records(self, tiny_config, lp_solver, robust_solver, mocker):
        """Test a failed aggregate write leaves no partial records file behind."""
        record_store = CsvRecordStore()
        mocker.patch.object(record_store, "write_aggregates", side_effect=SweepIOError("disk full"))
        use_case = RunSweepUseCase(RunReplicationUseCase(lp_solver, robust_solver), record_store)

        with pytest.raises(SweepIOError):
            use_case.execute(tiny_config)

        assert not Path(tiny_config.output_path).exists()

    def test_records_write_failure_propagates(self, tiny_config, lp_solver, robust_solver, mocker):
        """Test a failed records write stops the sweep before aggregates."""
        record_store = mocker.Mock(spec=RecordStorePort)
        record_store.write_records.side_effect = SweepIOError("read-only")
        use_case = RunSweepUseCase(RunReplicationUseCase(lp_solver, robust_solver), record_store)

        with pytest.raises(SweepIOError):
            use_case.execute(tiny_config)
        record_store.write_aggregates.assert_not_called()
