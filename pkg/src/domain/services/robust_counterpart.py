"""Problem builders and closed-form worst cases of uncertain constraints."""

import numpy as np
import numpy.typing as npt

from ..models.exceptions import DimensionError, InvalidProblemError
from ..models.matrix import DenseMatrix
from ..models.problem import ConstrainedProblem

VectorLike = npt.ArrayLike


def robust_support_value(a_bar: VectorLike, x: VectorLike, gamma: float) -> float:
    """a_bar^T x + gamma * ||x||_2, the max of (a_bar + delta)^T x over ||delta||_2 <= gamma.

    Raises:
        DimensionError: If the vectors differ in length
        InvalidProblemError: If gamma < 0
    """
    row = np.asarray(a_bar, dtype=np.float64).reshape(-1)
    point = np.asarray(x, dtype=np.float64).reshape(-1)
    if row.shape != point.shape:
        raise DimensionError(f"Lengths differ: {row.shape[0]} vs {point.shape[0]}")
    if gamma < 0.0:
        raise InvalidProblemError(f"gamma must be >= 0, got {gamma}")
    return float(row @ point + gamma * np.linalg.norm(point))


def box_support_value(a_bar: VectorLike, x: VectorLike, alpha: float, beta: float) -> float:
    """(alpha a_bar + beta 1)^T x.

    For a_bar >= 0 and x >= 0 this is the max of (y a_bar + z)^T x over
    |y| <= alpha, ||z||_inf <= beta, so the shrinkage constraint is the
    robust counterpart of a box uncertainty set.
    """
    row = np.asarray(a_bar, dtype=np.float64).reshape(-1)
    point = np.asarray(x, dtype=np.float64).reshape(-1)
    if row.shape != point.shape:
        raise DimensionError(f"Lengths differ: {row.shape[0]} vs {point.shape[0]}")
    return float((alpha * row + beta) @ point)


def build_nominal(a_bar: DenseMatrix, b: VectorLike, cost: VectorLike) -> ConstrainedProblem:
    """Plug the sample mean into the LP."""
    return ConstrainedProblem(a=a_bar, b=np.asarray(b), cost=np.asarray(cost))


def build_shrinkage(a_star: DenseMatrix, b: VectorLike, cost: VectorLike) -> ConstrainedProblem:
    """Plug the shrinkage estimate A* into the LP."""
    return ConstrainedProblem(a=a_star, b=np.asarray(b), cost=np.asarray(cost))


def build_robust(
    a_bar: DenseMatrix, b: VectorLike, cost: VectorLike, gamma: float
) -> ConstrainedProblem:
    """Every row protected by an L2 ball of radius gamma around a_bar_i."""
    if not gamma > 0.0:
        raise InvalidProblemError(f"Robust problems need gamma > 0, got {gamma}")
    return ConstrainedProblem(a=a_bar, b=np.asarray(b), cost=np.asarray(cost), robust_radius=gamma)
