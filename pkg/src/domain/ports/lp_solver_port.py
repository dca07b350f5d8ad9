"""Solver port interface."""

from abc import ABC, abstractmethod

from ..models.problem import ConstrainedProblem, Solution


class LPSolverPort(ABC):
    """Interface for solvers of max c^T x s.t. A x <= b, x >= 0.

    Implementations are single-use per call and keep no state between
    solves, so one instance may serve many replications.
    """

    @abstractmethod
    def solve(self, problem: ConstrainedProblem) -> Solution:
        """Solve a constrained problem.

        Args:
            problem: Problem to solve

        Returns:
            Solution; Infeasible, Unbounded and IterationLimit are statuses,
            not exceptions

        Raises:
            InvalidProblemError: If the problem violates the solver's
                precondition on robust_radius
        """
        pass
