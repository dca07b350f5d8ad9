"""Trace and norm functionals on dense matrices, plus SPD root construction.

All trace functionals are entrywise sums: tr(A B^T) is never formed as a
matrix product.
"""

import logging

import numpy as np

from ..models.exceptions import ConstructionError, DimensionError
from ..models.matrix import CovarianceKind, CovarianceSpec, DenseMatrix
from ..models.scenario import RngStream

logger = logging.getLogger(__name__)


def _check_same_shape(a: DenseMatrix, b: DenseMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"Shapes differ: {a.shape} vs {b.shape}")


def frobenius_inner(a: DenseMatrix, b: DenseMatrix) -> float:
    """tr(A B^T) = sum_ij a_ij b_ij.

    Raises:
        DimensionError: If the shapes differ
    """
    _check_same_shape(a, b)
    return float(np.sum(a.values * b.values))


def frobenius_norm_sq(a: DenseMatrix) -> float:
    """tr(A A^T), the squared Frobenius norm."""
    return float(np.sum(a.values * a.values))


def frobenius_loss(estimate: DenseMatrix, truth: DenseMatrix) -> float:
    """||estimate - truth||_F^2."""
    return frobenius_norm_sq(estimate - truth)


def make_spd_root(size: int, spec: CovarianceSpec, rng: RngStream) -> DenseMatrix:
    """Build a symmetric positive-definite root R; Sigma is defined as R @ R.

    Args:
        size: Dimension of R
        spec: Construction recipe
        rng: Stream used by the randomised recipes

    Returns:
        Symmetric positive-definite matrix R

    Raises:
        ConstructionError: If the recipe cannot give a positive-definite root
    """
    if size < 1:
        raise ConstructionError(f"size must be >= 1, got {size}")
    if not spec.scale > 0.0:
        raise ConstructionError(f"scale must be > 0, got {spec.scale}")

    if spec.kind is CovarianceKind.IDENTITY_SCALED:
        root = spec.scale * np.eye(size)
    elif spec.kind is CovarianceKind.DIAGONAL:
        root = spec.scale * np.diag(_diagonal_entries(size, spec, rng))
    elif spec.kind is CovarianceKind.DENSE_WELL_CONDITIONED:
        root = spec.scale * _diagonally_dominant_root(size, spec, rng)
    else:  # pragma: no cover
        raise ConstructionError(f"Unsupported covariance kind: {spec.kind}")

    return DenseMatrix(root)


def covariance_trace_ratio(root: DenseMatrix) -> float:
    """(1/size) tr(Sigma) for Sigma = R @ R with R symmetric."""
    return frobenius_norm_sq(root) / root.rows


def _diagonal_entries(size: int, spec: CovarianceSpec, rng: RngStream) -> np.ndarray:
    if spec.diagonal is not None:
        entries = np.asarray(spec.diagonal, dtype=np.float64)
        if entries.shape[0] != size:
            raise ConstructionError(
                f"diagonal has {entries.shape[0]} entries, expected {size}"
            )
    else:
        if not 0.0 < spec.low <= spec.high:
            raise ConstructionError("diagonal range must satisfy 0 < low <= high")
        entries = rng.generator().uniform(spec.low, spec.high, size)
    if np.any(entries <= 0.0):
        raise ConstructionError("diagonal entries must be positive")
    return entries


def _diagonally_dominant_root(size: int, spec: CovarianceSpec, rng: RngStream) -> np.ndarray:
    """Unit diagonal plus symmetric off-diagonal noise of bounded row mass.

    Gershgorin keeps every eigenvalue of R in [1 - rho, 1 + rho], so
    cond(R @ R) <= ((1 + rho) / (1 - rho))^2 <= max_condition.
    """
    if not spec.max_condition > 1.0:
        raise ConstructionError(f"max_condition must exceed 1, got {spec.max_condition}")
    root_condition = np.sqrt(spec.max_condition)
    rho = 0.99 * (root_condition - 1.0) / (root_condition + 1.0)

    root = np.eye(size)
    if size > 1:
        draws = rng.generator().uniform(-1.0, 1.0, (size, size))
        upper = np.triu(draws, k=1) * (rho / (size - 1))
        root = root + upper + upper.T

    off_diagonal_mass = np.sum(np.abs(root), axis=1) - np.abs(np.diag(root))
    if np.any(np.diag(root) - off_diagonal_mass <= 0.0):
        raise ConstructionError("generated root is not diagonally dominant")
    logger.debug(f"Built dense SPD root of size {size} with off-diagonal mass <= {rho:.3f}")
    return root
