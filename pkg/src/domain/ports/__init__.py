"""Domain ports (interfaces) package."""

from .chart_renderer_port import ChartRendererPort, ChartSeries, LineChart
from .lp_solver_port import LPSolverPort
from .matrix_store_port import MatrixStorePort
from .record_store_port import RecordStorePort
from .scenario_writer_port import ScenarioWriterPort

__all__ = [
    "LPSolverPort",
    "MatrixStorePort",
    "RecordStorePort",
    "ScenarioWriterPort",
    "ChartRendererPort",
    "ChartSeries",
    "LineChart",
]
