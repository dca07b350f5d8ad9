"""Dependency injection container.

This module wires up all dependencies and provides them to the application.
It's the only place that knows about concrete implementations.
"""

from ...adapters.persistence.matrix_csv import CsvMatrixStore
from ...adapters.persistence.record_csv_repository import CsvRecordStore
from ...adapters.persistence.scenario_bundle import ScenarioBundleWriter
from ...adapters.plotting.svg_line_chart import SvgLineChartRenderer
from ...adapters.solver.cutting_plane import CuttingPlaneSolver
from ...adapters.solver.dumping_solver import DumpingSolver
from ...adapters.solver.revised_simplex import RevisedSimplexSolver
from ...application.use_cases.emit_plots import EmitPlotsUseCase
from ...application.use_cases.estimate_matrix import EstimateMatrixUseCase
from ...application.use_cases.generate_scenario import GenerateScenarioUseCase
from ...application.use_cases.run_replication import RunReplicationUseCase
from ...application.use_cases.run_sweep import RunSweepUseCase
from ...domain.ports import (
    ChartRendererPort,
    LPSolverPort,
    MatrixStorePort,
    RecordStorePort,
    ScenarioWriterPort,
)
from ...infrastructure.config.settings import Settings


class Container:
    """Dependency injection container.

    This class is responsible for creating and managing all dependencies.
    It follows the dependency inversion principle by depending on ports
    (interfaces) while providing concrete implementations.
    """

    def __init__(self, settings: Settings):
        """Initialize container with settings.

        Args:
            settings: Application settings
        """
        self.settings = settings
        self._matrix_store: MatrixStorePort | None = None
        self._record_store: RecordStorePort | None = None

    def matrix_store(self) -> MatrixStorePort:
        if self._matrix_store is None:
            self._matrix_store = CsvMatrixStore()
        return self._matrix_store

    def record_store(self) -> RecordStorePort:
        if self._record_store is None:
            self._record_store = CsvRecordStore()
        return self._record_store

    def chart_renderer(self) -> ChartRendererPort:
        return SvgLineChartRenderer()

    def scenario_writer(self) -> ScenarioWriterPort:
        return ScenarioBundleWriter(self.matrix_store())

    def lp_solver(self) -> LPSolverPort:
        """Get the nominal LP solver, wrapped for debug dumps when configured."""
        solver: LPSolverPort = RevisedSimplexSolver(
            feasibility_tolerance=self.settings.feasibility_tolerance,
            max_iterations=self.settings.simplex_max_iterations,
            refactor_interval=self.settings.refactor_interval,
        )
        return self._with_dumps(solver)

    def robust_solver(self) -> LPSolverPort:
        """Get the cutting-plane robust solver."""
        solver: LPSolverPort = CuttingPlaneSolver(
            feasibility_tolerance=self.settings.feasibility_tolerance,
            round_limit=self.settings.robust_round_limit,
            gap_tolerance=self.settings.robust_gap_tolerance,
            max_iterations=self.settings.simplex_max_iterations,
            refactor_interval=self.settings.refactor_interval,
        )
        return self._with_dumps(solver)

    def run_replication_use_case(self) -> RunReplicationUseCase:
        return RunReplicationUseCase(lp_solver=self.lp_solver(), robust_solver=self.robust_solver())

    def run_sweep_use_case(self) -> RunSweepUseCase:
        return RunSweepUseCase(
            replication=self.run_replication_use_case(),
            record_store=self.record_store(),
        )

    def emit_plots_use_case(self) -> EmitPlotsUseCase:
        return EmitPlotsUseCase(record_store=self.record_store(), chart_renderer=self.chart_renderer())

    def estimate_matrix_use_case(self) -> EstimateMatrixUseCase:
        return EstimateMatrixUseCase(matrix_store=self.matrix_store())

    def generate_scenario_use_case(self) -> GenerateScenarioUseCase:
        return GenerateScenarioUseCase(scenario_writer=self.scenario_writer())

    def _with_dumps(self, solver: LPSolverPort) -> LPSolverPort:
        if self.settings.debug_dump_dir is None:
            return solver
        return DumpingSolver(solver, self.settings.debug_dump_dir, self.matrix_store())

