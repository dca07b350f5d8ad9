"""Solver adapters package."""

from .cutting_plane import CuttingPlaneSolver
from .dumping_solver import DumpingSolver
from .revised_simplex import RevisedSimplexSolver
from .simplex_engine import SimplexEngine

__all__ = ["SimplexEngine", "RevisedSimplexSolver", "CuttingPlaneSolver", "DumpingSolver"]
