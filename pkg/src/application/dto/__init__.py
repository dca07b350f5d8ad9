"""Application DTOs."""

from .estimate_dto import EstimateReport
from .scenario_dto import GeneratedScenario
from .sweep_dto import SweepSummary

__all__ = ["EstimateReport", "GeneratedScenario", "SweepSummary"]
