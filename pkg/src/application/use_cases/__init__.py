"""Use cases package."""

from .emit_plots import EmitPlotsUseCase
from .estimate_matrix import EstimateMatrixUseCase
from .generate_scenario import GenerateScenarioUseCase
from .run_replication import RunReplicationUseCase
from .run_sweep import RunSweepUseCase

__all__ = [
    "EstimateMatrixUseCase",
    "GenerateScenarioUseCase",
    "RunReplicationUseCase",
    "RunSweepUseCase",
    "EmitPlotsUseCase",
]
