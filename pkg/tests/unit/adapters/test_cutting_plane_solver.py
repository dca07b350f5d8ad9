"""Tests for the cutting-plane robust solver."""

import math

import numpy as np
import pytest

from src.adapters.solver.cutting_plane import CuttingPlaneSolver, boundary_scale, robust_recession
from src.domain.models.exceptions import InvalidProblemError
from src.domain.models.matrix import DenseMatrix
from src.domain.models.problem import ConstrainedProblem, SolveStatus


def _robust(a, b, cost, gamma) -> ConstrainedProblem:
    return ConstrainedProblem(
        a=DenseMatrix(np.asarray(a, float)),
        b=np.asarray(b, float),
        cost=np.asarray(cost, float),
        robust_radius=gamma,
    )


def _robust_residual(problem: ConstrainedProblem, x: np.ndarray) -> float:
    values = problem.a.values @ x + problem.robust_radius * np.linalg.norm(x) - problem.b
    return float(values.max())


def direction_oracle(a: np.ndarray, b: np.ndarray, cost: np.ndarray, gamma: float, steps: int) -> float:
    """Best objective along a grid of nonnegative unit directions (p = 2 or 3).

    With positive rows the largest feasible radius along a unit direction u
    is min_i b_i / (a_i . u + gamma).
    """
    p = a.shape[1]
    angles = np.linspace(0.0, math.pi / 2.0, steps)
    if p == 2:
        directions = np.column_stack([np.cos(angles), np.sin(angles)])
    else:
        theta, phi = np.meshgrid(angles, angles)
        directions = np.column_stack(
            [
                (np.sin(theta) * np.cos(phi)).ravel(),
                (np.sin(theta) * np.sin(phi)).ravel(),
                np.cos(theta).ravel(),
            ]
        )
    radii = np.min(b[None, :] / (directions @ a.T + gamma), axis=1)
    return float(np.max(radii * (directions @ cost)))


@pytest.mark.unit
class TestCuttingPlaneSolver:
    """Test robust solving with support-hyperplane cuts."""

    def test_one_dimensional(self, robust_solver, lp_solver):
        """Test x + x <= 4 gives 2, half the nominal optimum."""
        robust = robust_solver.solve(_robust([[1.0]], [4.0], [1.0], 1.0))
        assert robust.status is SolveStatus.OPTIMAL
        assert robust.x == pytest.approx([2.0])
        assert robust.cutting_planes_added >= 1

        nominal = lp_solver.solve(
            ConstrainedProblem(a=DenseMatrix.from_rows([[1.0]]), b=np.array([4.0]), cost=np.array([1.0]))
        )
        assert nominal.objective == pytest.approx(4.0)
        assert robust.objective < nominal.objective

    def test_symmetric_optimum(self, robust_solver):
        """Test the optimum of x1 + x2 s.t. x1 + x2 + ||x|| <= 4 is split evenly."""
        solution = robust_solver.solve(_robust([[1.0, 1.0]], [4.0], [1.0, 1.0], 1.0))
        assert solution.status is SolveStatus.OPTIMAL
        expected = 4.0 / (2.0 + math.sqrt(2.0))
        assert solution.x == pytest.approx([expected, expected], abs=1e-2)
        assert solution.objective == pytest.approx(2.0 * expected, rel=1e-5)
        assert _robust_residual(_robust([[1.0, 1.0]], [4.0], [1.0, 1.0], 1.0), solution.x) <= 1e-7

    def test_rejects_nominal_problem(self, robust_solver):
        """Test gamma = 0 is rejected."""
        with pytest.raises(InvalidProblemError):
            robust_solver.solve(_robust([[1.0]], [4.0], [1.0], 0.0))

    def test_round_limit(self):
        """Test an exhausted round budget reports the remaining violation."""
        solver = CuttingPlaneSolver(round_limit=0)
        solution = solver.solve(_robust([[1.0, 1.0]], [4.0], [1.0, 1.0], 1.0))
        assert solution.status is SolveStatus.ITERATION_LIMIT
        assert solution.max_violation is not None and solution.max_violation > 1e-7
        assert solution.x is None

    def test_random_instance_is_robust_feasible(self, robust_solver):
        """Test every row holds for its whole uncertainty ball."""
        rng = np.random.default_rng(21)
        problem = _robust(rng.uniform(4, 6, (4, 5)), rng.uniform(4, 6, 4), rng.uniform(4, 6, 5), 0.5)
        solution = robust_solver.solve(problem)
        assert solution.status is SolveStatus.OPTIMAL
        assert _robust_residual(problem, solution.x) <= 1e-7
        assert np.all(solution.x >= 0.0)

    def test_objective_non_increasing_in_gamma(self, robust_solver):
        """Test larger balls never improve the objective."""
        rng = np.random.default_rng(8)
        a, b, cost = rng.uniform(4, 6, (3, 3)), rng.uniform(4, 6, 3), rng.uniform(4, 6, 3)
        objectives = []
        for gamma in (0.1, 0.4, 0.8, 1.6):
            solution = robust_solver.solve(_robust(a, b, cost, gamma))
            assert solution.status is SolveStatus.OPTIMAL
            objectives.append(solution.objective)
        assert all(later <= earlier * (1 + 1e-5) for earlier, later in zip(objectives, objectives[1:]))

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_direction_oracle(self, robust_solver, seed):
        """Test small instances against a dense grid of directions."""
        rng = np.random.default_rng(100 + seed)
        p = 2 if seed % 2 == 0 else 3
        m = int(rng.integers(1, 5))
        a, b, cost = rng.uniform(4, 6, (m, p)), rng.uniform(4, 6, m), rng.uniform(4, 6, p)
        gamma = float(rng.choice([0.2, 0.5, 0.8]))

        solution = robust_solver.solve(_robust(a, b, cost, gamma))
        expected = direction_oracle(a, b, cost, gamma, steps=20001 if p == 2 else 401)
        assert solution.status is SolveStatus.OPTIMAL
        assert solution.objective == pytest.approx(expected, rel=5e-3)


@pytest.mark.unit
class TestGapStop:
    """Test the scaled inner point and the gap-based stop."""

    def test_boundary_scale(self):
        """Test scaling onto the robust boundary."""
        problem = _robust([[1.0, 1.0]], [4.0], [1.0, 1.0], 1.0)
        assert boundary_scale(problem, np.array([2.0, 0.0])) == pytest.approx(1.0)
        assert boundary_scale(problem, np.array([4.0, 0.0])) == pytest.approx(0.5)
        assert boundary_scale(problem, np.array([1.0, 0.0])) == 1.0

    def test_boundary_scale_needs_positive_rhs(self):
        """Test no inner point exists without a positive right-hand side."""
        problem = _robust([[1.0, 1.0], [-1.0, 0.0]], [4.0, 0.0], [1.0, 1.0], 1.0)
        assert boundary_scale(problem, np.array([1.0, 1.0])) is None

    def test_loose_gap_stops_at_first_round(self):
        """Test a loose gap tolerance returns the scaled incumbent at once."""
        problem = _robust([[1.0, 1.0]], [4.0], [1.0, 1.0], 1.0)
        solution = CuttingPlaneSolver(gap_tolerance=0.5).solve(problem)
        assert solution.status is SolveStatus.OPTIMAL
        assert solution.cutting_planes_added == 1
        assert _robust_residual(problem, solution.x) <= 1e-7
        assert solution.objective >= 2.0 - 1e-9


@pytest.mark.unit
class TestUnboundedRelaxation:
    """Test robust problems whose first relaxations are unbounded."""

    def test_bounded_robust_problem_with_unbounded_relaxation(self, robust_solver):
        """Test -0.8 x1 + ||x|| <= 1 is bounded although the first relaxation is not."""
        problem = _robust([[-0.8, 0.0]], [1.0], [1.0, 1.0], 1.0)
        solution = robust_solver.solve(problem)

        # x1 = (2.176 + sqrt(5.44)) / 0.9792, x2 = 0.36 x1 - 0.8 on the boundary ellipse
        x1 = (2.176 + math.sqrt(5.44)) / 0.9792
        assert solution.status is SolveStatus.OPTIMAL
        assert solution.objective == pytest.approx(x1 + 0.36 * x1 - 0.8, rel=1e-4)
        assert solution.cutting_planes_added >= 2
        assert _robust_residual(problem, solution.x) <= 1e-7

    def test_mixed_sign_rows(self, robust_solver):
        """Test mixed-sign rows against the direction oracle."""
        a, b, cost = np.array([[-0.8, 0.0], [-0.2, 0.6]]), np.array([1.0, 2.0]), np.array([1.0, 1.0])
        problem = _robust(a, b, cost, 1.0)
        solution = robust_solver.solve(problem)
        assert solution.status is SolveStatus.OPTIMAL
        assert _robust_residual(problem, solution.x) <= 1e-7
        assert solution.objective == pytest.approx(direction_oracle(a, b, cost, 1.0, steps=20001), rel=5e-3)

    def test_recession_direction_is_unbounded(self, robust_solver):
        """Test a direction that keeps every robust row bounded gives Unbounded."""
        solution = robust_solver.solve(_robust([[-1.5, -1.5]], [1.0], [1.0, 1.0], 1.0))
        assert solution.status is SolveStatus.UNBOUNDED
        assert solution.x is None

    def test_recession_with_negative_rhs_checks_feasibility(self, robust_solver):
        """Test a negative right-hand side still reports Unbounded when the set is nonempty."""
        solution = robust_solver.solve(_robust([[-1.5, -1.5]], [-1.0], [1.0, 1.0], 1.0))
        assert solution.status is SolveStatus.UNBOUNDED

    def test_robust_recession(self):
        """Test the recession check on improving and non-improving directions."""
        problem = _robust([[-0.8, 0.0]], [1.0], [1.0, 1.0], 1.0)
        assert not robust_recession(problem, np.array([1.0, 0.0]), 1e-7)
        assert not robust_recession(problem, np.zeros(2), 1e-7)
        steep = _robust([[-1.5, -1.5]], [1.0], [1.0, 1.0], 1.0)
        assert robust_recession(steep, np.array([2.0, 0.0]), 1e-7)
        assert not robust_recession(_robust([[-1.5, -1.5]], [1.0], [-1.0, -1.0], 1.0), np.array([1.0, 0.0]), 1e-7)
