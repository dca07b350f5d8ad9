"""Dense revised simplex engine.

Standard form: max c^T z  s.t.  M z = rhs, z >= 0, where z stacks the
structural variables, one slack per row, and one artificial per row whose
right-hand side was negative. The basis inverse is kept explicitly,
updated by rank-one eta steps and refactored periodically.

Pricing is Dantzig's largest reduced cost; after a run of degenerate
pivots the engine switches to Bland's smallest-index rule, which cannot
cycle. Ratio-test ties always go to the smallest basic variable index, so
results are deterministic.
"""

import logging

import numpy as np

from ...domain.models.matrix import FloatArray
from ...domain.models.problem import SolveStatus

logger = logging.getLogger(__name__)


class SimplexEngine:
    """Mutable simplex state for one problem; not shared between threads."""

    def __init__(
        self,
        a: FloatArray,
        b: FloatArray,
        cost: FloatArray,
        *,
        tolerance: float = 1e-9,
        max_iterations: int | None = None,
        refactor_interval: int = 100,
        degenerate_limit: int = 50,
    ):
        """Set up the slack (and artificial) starting basis.

        Args:
            a: (m, p) constraint matrix
            b: Right-hand side of length m
            cost: Objective of length p, maximised
            tolerance: Pivot, reduced-cost and feasibility tolerance
            max_iterations: Pivot budget across all phases; defaults to
                max(1000, 20 (m + p))
            refactor_interval: Pivots between fresh basis inversions
            degenerate_limit: Consecutive degenerate pivots before Bland's rule
        """
        a = np.asarray(a, dtype=np.float64)
        b = np.asarray(b, dtype=np.float64).reshape(-1)
        rows, cols = a.shape
        negative = np.flatnonzero(b < 0.0)

        self.structural = cols
        self.tolerance = tolerance
        self.max_iterations = max_iterations or max(1000, 20 * (rows + cols))
        self.refactor_interval = refactor_interval
        self.degenerate_limit = degenerate_limit
        self.iterations = 0

        total = cols + rows + negative.size
        matrix = np.zeros((rows, total))
        matrix[:, :cols] = a
        matrix[np.arange(rows), cols + np.arange(rows)] = 1.0
        matrix[negative] *= -1.0
        artificial = cols + rows + np.arange(negative.size)
        matrix[negative, artificial] = 1.0

        self._matrix = matrix
        self._rhs = np.abs(b)
        self._cost = np.zeros(total)
        self._cost[:cols] = np.asarray(cost, dtype=np.float64).reshape(-1)
        self._artificial = artificial
        self._slack = cols + np.arange(rows)
        self._blocked = np.zeros(total, dtype=bool)

        basis = cols + np.arange(rows)
        basis[negative] = artificial
        self._basis = basis
        self._basis_inverse = np.eye(rows)
        self._basic_values = self._rhs.copy()
        self._since_refactor = 0
        self._ray: FloatArray | None = None

    @property
    def rows(self) -> int:
        return int(self._matrix.shape[0])

    def solve(self) -> SolveStatus:
        """Two-phase primal simplex from the starting basis."""
        if self._artificial.size:
            phase_one = np.zeros_like(self._cost)
            phase_one[self._artificial] = -1.0
            status = self._primal(phase_one)
            if status is not SolveStatus.OPTIMAL:
                return status
            infeasibility = float(np.sum(self._values()[self._artificial]))
            if infeasibility > self.tolerance * max(1.0, float(np.max(self._rhs))):
                logger.debug(f"Phase one ended with infeasibility {infeasibility:.3g}")
                return SolveStatus.INFEASIBLE
            self._expel_artificials()
            self._blocked[self._artificial] = True
        return self._finish(self._primal(self._cost))

    def add_row(self, coefficients: FloatArray, rhs: float) -> None:
        """Append the constraint coefficients^T x <= rhs with a basic slack.

        The current basis stays dual feasible, so reoptimize() can restore
        primal feasibility with dual simplex pivots.
        """
        rows, total = self._matrix.shape
        row = np.zeros(total + 1)
        row[: self.structural] = np.asarray(coefficients, dtype=np.float64).reshape(-1)
        row[total] = 1.0

        matrix = np.zeros((rows + 1, total + 1))
        matrix[:rows, :total] = self._matrix
        matrix[rows] = row
        self._matrix = matrix

        basic_row = row[self._basis]
        inverse = np.zeros((rows + 1, rows + 1))
        inverse[:rows, :rows] = self._basis_inverse
        inverse[rows, :rows] = -basic_row @ self._basis_inverse
        inverse[rows, rows] = 1.0
        self._basis_inverse = inverse

        self._basic_values = np.append(self._basic_values, rhs - basic_row @ self._basic_values)
        self._rhs = np.append(self._rhs, rhs)
        self._cost = np.append(self._cost, 0.0)
        self._blocked = np.append(self._blocked, False)
        self._basis = np.append(self._basis, total)
        self._slack = np.append(self._slack, total)

    def reoptimize(self) -> SolveStatus:
        """Dual simplex from a dual feasible basis, then a primal clean-up."""
        bland = False
        streak = 0
        while True:
            if self.iterations >= self.max_iterations:
                return SolveStatus.ITERATION_LIMIT
            negative = np.flatnonzero(self._basic_values < -self.tolerance)
            if negative.size == 0:
                return self._finish(self._primal(self._cost))

            if bland:
                leave = int(negative[np.argmin(self._basis[negative])])
            else:
                leave = int(negative[np.argmin(self._basic_values[negative])])

            reduced = np.minimum(self._reduced_costs(self._cost), 0.0)
            pivot_row = self._basis_inverse[leave] @ self._matrix
            eligible = self._nonbasic() & (pivot_row < -self.tolerance)
            if not eligible.any():
                return SolveStatus.INFEASIBLE

            candidates = np.flatnonzero(eligible)
            ratios = reduced[candidates] / pivot_row[candidates]
            best = ratios.min()
            enter = int(candidates[np.flatnonzero(ratios <= best + self.tolerance)[0]])

            streak = streak + 1 if best <= self.tolerance else 0
            if streak >= self.degenerate_limit and not bland:
                logger.debug("Dual simplex switching to Bland's rule")
                bland = True
            self._pivot(leave, enter, self._basis_inverse @ self._matrix[:, enter])

    def structural_values(self) -> FloatArray:
        """Current values of the structural variables."""
        return self._values()[: self.structural].copy()

    def unbounded_ray(self) -> FloatArray | None:
        """Structural part of the improving ray found by the last Unbounded solve."""
        if self._ray is None:
            return None
        return self._ray[: self.structural].copy()

    def row_duals(self) -> FloatArray:
        """Dual prices of the rows in the original sign convention."""
        duals = self._cost[self._basis] @ self._basis_inverse
        signs = np.where(self._matrix[np.arange(self.rows), self._slack] < 0, -1.0, 1.0)
        return duals * signs

    def _values(self) -> FloatArray:
        values = np.zeros(self._matrix.shape[1])
        values[self._basis] = self._basic_values
        return values

    def _nonbasic(self) -> np.ndarray:
        mask = ~self._blocked
        mask[self._basis] = False
        return mask

    def _reduced_costs(self, cost: FloatArray) -> FloatArray:
        duals = cost[self._basis] @ self._basis_inverse
        reduced = cost - duals @ self._matrix
        reduced[self._basis] = 0.0
        return reduced

    def _primal(self, cost: FloatArray) -> SolveStatus:
        bland = False
        streak = 0
        while True:
            if self.iterations >= self.max_iterations:
                return SolveStatus.ITERATION_LIMIT

            reduced = self._reduced_costs(cost)
            reduced[~self._nonbasic()] = 0.0
            if bland:
                improving = np.flatnonzero(reduced > self.tolerance)
                if improving.size == 0:
                    return SolveStatus.OPTIMAL
                enter = int(improving[0])
            else:
                enter = int(np.argmax(reduced))
                if reduced[enter] <= self.tolerance:
                    return SolveStatus.OPTIMAL

            column = self._basis_inverse @ self._matrix[:, enter]
            positive = np.flatnonzero(column > self.tolerance)
            if positive.size == 0:
                ray = np.zeros(self._matrix.shape[1])
                ray[self._basis] = -column
                ray[enter] = 1.0
                self._ray = ray
                return SolveStatus.UNBOUNDED

            ratios = np.maximum(self._basic_values[positive], 0.0) / column[positive]
            step = ratios.min()
            ties = positive[ratios <= step + self.tolerance * max(1.0, step)]
            leave = int(ties[np.argmin(self._basis[ties])])

            streak = streak + 1 if step <= self.tolerance else 0
            if streak >= self.degenerate_limit and not bland:
                logger.debug("Primal simplex switching to Bland's rule")
                bland = True
            self._pivot(leave, enter, column)

    def _pivot(self, leave: int, enter: int, column: FloatArray) -> None:
        pivot = column[leave]
        pivot_row = self._basis_inverse[leave] / pivot
        self._basis_inverse -= np.outer(column, pivot_row)
        self._basis_inverse[leave] = pivot_row

        step = self._basic_values[leave] / pivot
        self._basic_values -= step * column
        self._basic_values[leave] = step
        self._basis[leave] = enter

        self.iterations += 1
        self._since_refactor += 1
        if self._since_refactor >= self.refactor_interval:
            self._refactor()

    def _refactor(self) -> None:
        try:
            inverse = np.linalg.inv(self._matrix[:, self._basis])
        except np.linalg.LinAlgError:
            logger.warning("Basis matrix is singular; keeping the updated inverse")
            return
        self._basis_inverse = inverse
        self._basic_values = inverse @ self._rhs
        self._since_refactor = 0

    def _finish(self, status: SolveStatus) -> SolveStatus:
        if status is SolveStatus.OPTIMAL:
            self._refactor()
        return status

    def _expel_artificials(self) -> None:
        artificial = np.zeros(self._matrix.shape[1], dtype=bool)
        artificial[self._artificial] = True
        for position in range(self.rows):
            if not artificial[self._basis[position]]:
                continue
            pivot_row = self._basis_inverse[position] @ self._matrix
            eligible = self._nonbasic() & ~artificial & (np.abs(pivot_row) > self.tolerance)
            if not eligible.any():
                logger.debug(f"Row {position} is redundant; artificial stays basic at zero")
                continue
            candidates = np.flatnonzero(eligible)
            enter = int(candidates[np.argmax(np.abs(pivot_row[candidates]))])
            self._pivot(position, enter, self._basis_inverse @ self._matrix[:, enter])
