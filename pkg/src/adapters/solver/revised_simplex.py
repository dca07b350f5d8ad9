"""Linear program solver adapter backed by the revised simplex engine."""

import logging

import numpy as np

from ...domain.models.exceptions import InvalidProblemError
from ...domain.models.problem import ConstrainedProblem, Solution, SolveStatus
from ...domain.ports.lp_solver_port import LPSolverPort
from .simplex_engine import SimplexEngine

logger = logging.getLogger(__name__)


def feasibility_residual(problem: ConstrainedProblem, x: np.ndarray) -> float:
    """Largest violation of A x <= b and x >= 0 (0 when feasible)."""
    row_excess = problem.a.values @ x - problem.b
    return float(max(0.0, np.max(row_excess), np.max(-x)))


class RevisedSimplexSolver(LPSolverPort):
    """Nominal LP solver: max c^T x s.t. A x <= b, x >= 0."""

    def __init__(
        self,
        feasibility_tolerance: float = 1e-7,
        max_iterations: int | None = None,
        refactor_interval: int = 100,
    ):
        """Initialize solver.

        Args:
            feasibility_tolerance: Absolute per-constraint tolerance used by
                the post-solve certificate
            max_iterations: Pivot budget; None uses the engine's default
            refactor_interval: Pivots between basis reinversions
        """
        self.feasibility_tolerance = feasibility_tolerance
        self.max_iterations = max_iterations
        self.refactor_interval = refactor_interval

    def solve(self, problem: ConstrainedProblem) -> Solution:
        if problem.is_robust:
            raise InvalidProblemError(
                f"RevisedSimplexSolver needs robust_radius == 0, got {problem.robust_radius}"
            )

        engine = SimplexEngine(
            problem.a.values,
            problem.b,
            problem.cost,
            max_iterations=self.max_iterations,
            refactor_interval=self.refactor_interval,
        )
        status = engine.solve()
        if status is not SolveStatus.OPTIMAL:
            if status is SolveStatus.ITERATION_LIMIT:
                logger.error(f"Simplex hit its pivot budget after {engine.iterations} pivots")
            return Solution(status=status, iterations=engine.iterations)

        x = np.maximum(engine.structural_values(), 0.0)
        residual = feasibility_residual(problem, x)
        if residual > self.feasibility_tolerance:
            logger.warning(f"Simplex vertex failed its feasibility certificate: {residual:.3g}")
            return Solution(
                status=SolveStatus.ITERATION_LIMIT,
                iterations=engine.iterations,
                max_violation=residual,
            )

        objective = float(problem.cost @ x)
        duals = engine.row_duals()[: problem.m]
        gap = abs(float(problem.b @ duals) - objective)
        logger.debug(
            f"LP {problem.m}x{problem.p} solved in {engine.iterations} pivots, "
            f"objective={objective:.10g}, duality gap={gap:.3g}"
        )
        return Solution(
            status=SolveStatus.OPTIMAL,
            x=x,
            objective=objective,
            iterations=engine.iterations,
        )
