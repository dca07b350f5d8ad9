"""Robust counterpart solver by support-hyperplane cutting planes.

The robust rows a_i^T x + gamma ||x||_2 <= b_i share the norm term, so the
solver works on the epigraph form

    max c^T x  s.t.  a_i^T x + gamma t <= b_i,  u_k^T x - t <= 0,  x, t >= 0

where every u_k is a unit vector. Each round takes the incumbent x, and if
some robust row is violated adds the support hyperplane of the norm at x,
u = x / ||x||, then re-optimises from the previous basis with dual simplex.
The rows a_i^T x + gamma u^T x <= b_i implied by a shared cut are exactly
the per-row support hyperplanes at the incumbent.

With b > 0 the incumbent scaled onto the robust boundary is feasible. The
best scaled point bounds the optimum from below while the LP bounds it from
above, so the solve can stop on a small relative gap. The scaled point also
serves as the inner point of in-out separation: a second cut is taken at the
midpoint between it and the incumbent.

With only a few cuts the relaxation can be unbounded although the robust
problem is not. An improving ray that is no robust recession direction has
t below its norm, so the cut at the ray removes it and the relaxation is
rebuilt and solved again.
"""

import logging
from dataclasses import replace

import numpy as np

from ...domain.models.exceptions import InvalidProblemError
from ...domain.models.matrix import FloatArray
from ...domain.models.problem import ConstrainedProblem, Solution, SolveStatus
from ...domain.ports.lp_solver_port import LPSolverPort
from .simplex_engine import SimplexEngine

logger = logging.getLogger(__name__)


def robust_row_values(problem: ConstrainedProblem, x: FloatArray) -> FloatArray:
    """a_i^T x + gamma ||x||_2 for every row."""
    return problem.a.values @ x + problem.robust_radius * float(np.linalg.norm(x))


def robust_recession(problem: ConstrainedProblem, direction: FloatArray, tolerance: float) -> bool:
    """Whether direction >= 0 improves the cost and keeps every robust row bounded."""
    norm = float(np.linalg.norm(direction))
    if norm == 0.0 or float(problem.cost @ direction) <= 0.0:
        return False
    unit = direction / norm
    return bool(np.all(problem.a.values @ unit + problem.robust_radius <= tolerance))


def boundary_scale(problem: ConstrainedProblem, x: FloatArray) -> float | None:
    """Largest theta <= 1 with theta x robust feasible; None unless every b_i > 0."""
    if not np.all(problem.b > 0.0):
        return None
    values = robust_row_values(problem, x)
    binding = values > 0.0
    if not binding.any():
        return 1.0
    return float(min(1.0, np.min(problem.b[binding] / values[binding])))


class CuttingPlaneSolver(LPSolverPort):
    """Solver for problems with robust_radius > 0."""

    def __init__(
        self,
        feasibility_tolerance: float = 1e-7,
        round_limit: int = 200,
        max_iterations: int | None = None,
        refactor_interval: int = 100,
        gap_tolerance: float = 1e-5,
    ):
        """Initialize solver.

        Args:
            feasibility_tolerance: Largest accepted robust row violation
            round_limit: Cut rounds before giving up with IterationLimit
            max_iterations: Pivot budget of the underlying engine
            refactor_interval: Pivots between basis reinversions
            gap_tolerance: Relative gap between the LP bound and the best
                robust feasible point that ends the solve
        """
        self.feasibility_tolerance = feasibility_tolerance
        self.round_limit = round_limit
        self.max_iterations = max_iterations
        self.refactor_interval = refactor_interval
        self.gap_tolerance = gap_tolerance

    def solve(self, problem: ConstrainedProblem) -> Solution:
        if not problem.is_robust:
            raise InvalidProblemError("CuttingPlaneSolver needs robust_radius > 0")

        p = problem.p
        # ||x|| >= 1^T x / sqrt(p) for x >= 0: the support hyperplane at x = 1
        cuts = [np.full(p, 1.0 / np.sqrt(p))]
        engine = self._engine(problem, cuts)
        status = engine.solve()
        spent = 0

        worst = None
        inner: FloatArray | None = None
        inner_objective = -np.inf
        for round_index in range(self.round_limit + 1):
            if status is SolveStatus.UNBOUNDED:
                improving = engine.unbounded_ray()
                assert improving is not None
                ray = np.maximum(improving[:p], 0.0)
                if robust_recession(problem, ray, self.feasibility_tolerance):
                    return self._recession(problem, spent + engine.iterations, len(cuts))
                if round_index == self.round_limit or not np.any(ray > 0.0):
                    break
                # The relaxation ray has t below ||ray||, so the cut at the ray removes it
                logger.debug(f"Round {round_index}: relaxation unbounded, cutting its ray")
                cuts.append(ray / np.linalg.norm(ray))
                spent += engine.iterations
                engine = self._engine(problem, cuts)
                status = engine.solve()
                continue

            if status is not SolveStatus.OPTIMAL:
                if status is SolveStatus.ITERATION_LIMIT:
                    logger.error(f"Cutting-plane LP hit its pivot budget in round {round_index}")
                return Solution(
                    status=status,
                    iterations=spent + engine.iterations,
                    cutting_planes_added=len(cuts),
                    max_violation=worst,
                )

            x = np.maximum(engine.structural_values()[:p], 0.0)
            norm = float(np.linalg.norm(x))
            worst = float(np.max(robust_row_values(problem, x) - problem.b))
            bound = float(problem.cost @ x)
            logger.debug(f"Round {round_index}: max robust violation {worst:.3g}, cuts {len(cuts)}")

            if worst <= self.feasibility_tolerance:
                return self._optimal(x, bound, spent + engine.iterations, len(cuts), round_index, problem)

            theta = boundary_scale(problem, x)
            if theta is not None and theta * bound > inner_objective:
                inner, inner_objective = theta * x, theta * bound
            if inner is not None and bound - inner_objective <= self.gap_tolerance * max(abs(bound), 1e-12):
                logger.debug(f"Gap {bound - inner_objective:.3g} closed by the scaled incumbent")
                return self._optimal(
                    inner, inner_objective, spent + engine.iterations, len(cuts), round_index, problem
                )

            if round_index == self.round_limit or norm == 0.0:
                break

            direction = x / norm
            engine.add_row(np.append(direction, -1.0), 0.0)
            cuts.append(direction)
            if inner is not None:
                midpoint = 0.5 * (x + inner)
                between = midpoint / np.linalg.norm(midpoint)
                if np.linalg.norm(between - direction) > 1e-9:
                    engine.add_row(np.append(between, -1.0), 0.0)
                    cuts.append(between)
            status = engine.reoptimize()

        residual = "unknown" if worst is None else f"{worst:.3g}"
        logger.error(f"Cutting planes stopped after {self.round_limit} rounds with violation {residual}")
        return Solution(
            status=SolveStatus.ITERATION_LIMIT,
            iterations=spent + engine.iterations,
            cutting_planes_added=len(cuts),
            max_violation=worst,
        )

    def _engine(self, problem: ConstrainedProblem, cuts: list[FloatArray]) -> SimplexEngine:
        """Epigraph LP with the norm cuts u^T x - t <= 0 appended."""
        epigraph = np.hstack([problem.a.values, np.full((problem.m, 1), problem.robust_radius)])
        engine = SimplexEngine(
            epigraph,
            problem.b,
            np.append(problem.cost, 0.0),
            max_iterations=self.max_iterations or max(1000, 20 * (problem.m + problem.p)) * 4,
            refactor_interval=self.refactor_interval,
        )
        for cut in cuts:
            engine.add_row(np.append(cut, -1.0), 0.0)
        return engine

    def _recession(self, problem: ConstrainedProblem, iterations: int, cuts: int) -> Solution:
        """Unbounded when the robust set is nonempty, Infeasible otherwise."""
        if np.all(problem.b >= 0.0):
            feasible = True
        else:
            # Zero cost keeps every relaxation bounded, so this only settles feasibility
            feasibility = self.solve(replace(problem, cost=np.zeros(problem.p)))
            iterations += feasibility.iterations
            if feasibility.status is SolveStatus.ITERATION_LIMIT:
                return Solution(status=SolveStatus.ITERATION_LIMIT, iterations=iterations, cutting_planes_added=cuts)
            feasible = feasibility.is_optimal
        status = SolveStatus.UNBOUNDED if feasible else SolveStatus.INFEASIBLE
        logger.debug(f"Robust problem has an improving recession direction; reporting {status.value}")
        return Solution(status=status, iterations=iterations, cutting_planes_added=cuts)

    @staticmethod
    def _optimal(
        x: FloatArray, objective: float, iterations: int, cuts: int, rounds: int, problem: ConstrainedProblem
    ) -> Solution:
        logger.debug(
            f"Robust problem gamma={problem.robust_radius:g} solved after {rounds} rounds, "
            f"{iterations} pivots, objective={objective:.10g}"
        )
        return Solution(
            status=SolveStatus.OPTIMAL,
            x=x,
            objective=float(objective),
            iterations=iterations,
            cutting_planes_added=cuts,
        )
