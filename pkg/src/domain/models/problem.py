"""Constrained problem and solution domain models."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .exceptions import DimensionError, InvalidProblemError
from .matrix import DenseMatrix, FloatArray


class SolveStatus(str, Enum):
    """Terminal state of a solve."""

    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"
    ITERATION_LIMIT = "IterationLimit"


def _frozen_vector(values: FloatArray | list[float], name: str) -> FloatArray:
    vector = np.array(values, dtype=np.float64, copy=True).reshape(-1)
    if not np.all(np.isfinite(vector)):
        raise InvalidProblemError(f"{name} entries must be finite")
    vector.setflags(write=False)
    return vector


@dataclass(frozen=True, eq=False)
class ConstrainedProblem:
    """max cost^T x  s.t.  A x <= b, x >= 0, optionally robust.

    With ``robust_radius`` = gamma > 0 every row must hold for all
    perturbations of a_i inside the L2 ball of radius gamma, i.e.
    a_i^T x + gamma * ||x||_2 <= b_i.
    """

    a: DenseMatrix
    b: FloatArray
    cost: FloatArray
    robust_radius: float = 0.0

    def __post_init__(self) -> None:
        b = _frozen_vector(self.b, "b")
        cost = _frozen_vector(self.cost, "cost")
        if b.shape[0] != self.a.rows:
            raise DimensionError(f"b has length {b.shape[0]}, A has {self.a.rows} rows")
        if cost.shape[0] != self.a.cols:
            raise DimensionError(f"cost has length {cost.shape[0]}, A has {self.a.cols} columns")
        if not np.isfinite(self.robust_radius) or self.robust_radius < 0.0:
            raise InvalidProblemError(f"robust_radius must be >= 0, got {self.robust_radius}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "cost", cost)
        object.__setattr__(self, "robust_radius", float(self.robust_radius))

    @property
    def m(self) -> int:
        return self.a.rows

    @property
    def p(self) -> int:
        return self.a.cols

    @property
    def is_robust(self) -> bool:
        return self.robust_radius > 0.0


@dataclass(frozen=True, eq=False)
class Solution:
    """Result of a solve.

    ``x`` and ``objective`` are present iff status is OPTIMAL.
    ``max_violation`` reports the residual when the round limit stops a
    cutting-plane solve.
    """

    status: SolveStatus
    x: FloatArray | None = None
    objective: float | None = None
    iterations: int = 0
    cutting_planes_added: int = 0
    max_violation: float | None = None

    def __post_init__(self) -> None:
        optimal = self.status is SolveStatus.OPTIMAL
        if optimal != (self.x is not None) or optimal != (self.objective is not None):
            raise ValueError("x and objective must be present iff the status is Optimal")

    @property
    def is_optimal(self) -> bool:
        return self.status is SolveStatus.OPTIMAL
