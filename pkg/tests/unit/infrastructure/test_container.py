"""Tests for the dependency injection container."""

import pytest

from src.adapters.persistence.matrix_csv import CsvMatrixStore
from src.adapters.solver.cutting_plane import CuttingPlaneSolver
from src.adapters.solver.dumping_solver import DumpingSolver
from src.adapters.solver.revised_simplex import RevisedSimplexSolver
from src.application.use_cases.run_sweep import RunSweepUseCase
from src.infrastructure.config.settings import Settings
from src.infrastructure.dependency_injection.container import Container


@pytest.mark.unit
class TestContainer:
    """Test wiring of concrete adapters."""

    def test_solvers_follow_settings(self):
        """Test solver knobs come from settings."""
        container = Container(
            Settings(_env_file=None, robust_round_limit=7, robust_gap_tolerance=1e-3, refactor_interval=9)
        )
        lp_solver = container.lp_solver()
        robust_solver = container.robust_solver()
        assert isinstance(lp_solver, RevisedSimplexSolver)
        assert isinstance(robust_solver, CuttingPlaneSolver)
        assert robust_solver.round_limit == 7
        assert robust_solver.gap_tolerance == 1e-3
        assert robust_solver.refactor_interval == 9

    def test_debug_dumps_wrap_solvers(self, tmp_path):
        """Test a dump directory wraps both solvers."""
        container = Container(Settings(_env_file=None, debug_dump_dir=tmp_path))
        assert isinstance(container.lp_solver(), DumpingSolver)
        assert isinstance(container.robust_solver(), DumpingSolver)

    def test_stores_are_shared(self, settings):
        """Test stores are created once per container."""
        container = Container(settings)
        assert isinstance(container.matrix_store(), CsvMatrixStore)
        assert container.matrix_store() is container.matrix_store()
        assert container.record_store() is container.record_store()

    def test_use_cases(self, settings):
        """Test use cases are assembled from the container's adapters."""
        container = Container(settings)
        sweep = container.run_sweep_use_case()
        assert isinstance(sweep, RunSweepUseCase)
        assert sweep.record_store is container.record_store()
        assert container.estimate_matrix_use_case().matrix_store is container.matrix_store()
