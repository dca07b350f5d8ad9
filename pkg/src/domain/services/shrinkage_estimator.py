"""Linear shrinkage estimation of a matrix observed through noisy samples.

The estimate is A* = alpha * A_bar + beta * U, where A_bar is the sample
mean and U a target matrix. Every formula is written with tr(U U^T) as the
scaling term, so any nonzero target works without special-casing.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..models.exceptions import (
    DegenerateSampleError,
    DimensionError,
    InsufficientSamplesError,
    InvalidTargetError,
)
from ..models.matrix import DenseMatrix, FloatArray
from ..models.observation import NoiseTag, ObservationSet
from ..models.shrinkage import (
    CoefficientKind,
    ShrinkageCoefficients,
    TargetKind,
    TargetMatrix,
)
from .linear_algebra import frobenius_inner, frobenius_norm_sq

logger = logging.getLogger(__name__)

# D <= DEGENERACY_RATIO * tr(A_bar A_bar^T) / tr(U U^T) counts as A_bar proportional to U
DEGENERACY_RATIO = 1e-12


@dataclass(frozen=True)
class TraceStatistics:
    """Normalised trace functionals, each divided by tr(U U^T)."""

    mean_sq: float  # tr(A_bar A_bar^T) / tr(U U^T), or its deterministic equivalent
    mean_target: float  # tr(A_bar U^T) / tr(U U^T)
    mean_truth: float  # tr(A_bar A^T) / tr(U U^T)


def _check_target(shape: tuple[int, int], target: TargetMatrix) -> float:
    if target.shape != shape:
        raise DimensionError(f"Target has shape {target.shape}, expected {shape}")
    target_sq = frobenius_norm_sq(target.matrix)
    if not target_sq > 0.0:
        raise InvalidTargetError("Target matrix must satisfy tr(U U^T) > 0")
    return target_sq


def _deviations(obs: ObservationSet) -> tuple[FloatArray, FloatArray]:
    """Sample mean and the stacked deviations from it.

    The mean is taken as first sample plus the mean offset, so identical
    samples give exactly zero deviations.
    """
    stacked = obs.stacked
    offsets = stacked - stacked[0]
    mean = stacked[0] + offsets.mean(axis=0)
    return mean, stacked - mean


def sample_mean(obs: ObservationSet) -> DenseMatrix:
    """Entrywise mean A_bar = (1/n) sum_k A_k."""
    mean, _ = _deviations(obs)
    return DenseMatrix(mean)


def _spread(obs: ObservationSet) -> tuple[DenseMatrix, float]:
    mean, deviations = _deviations(obs)
    return DenseMatrix(mean), float(np.sum(deviations * deviations))


def noise_level_hat(obs: ObservationSet) -> float:
    """Estimate of the per-entry noise variance.

    (1 / ((n - 1) m p)) * sum_k tr((A_k - A_bar)(A_k - A_bar)^T). Under
    i.i.d. noise this estimates sigma^2; under column-correlated noise
    A + Sigma^{1/2} E it estimates (1/m) tr(Sigma).

    Raises:
        InsufficientSamplesError: If fewer than two samples are given
    """
    if obs.n < 2:
        raise InsufficientSamplesError(f"At least 2 samples are required, got {obs.n}")
    _, spread = _spread(obs)
    return spread / ((obs.n - 1) * obs.rows * obs.cols)


def coefficients_bona_fide(
    obs: ObservationSet,
    target: TargetMatrix,
    clamp: bool = False,
) -> ShrinkageCoefficients:
    """Data-driven shrinkage coefficients.

    alpha = 1 - V / D with
        V = sum_k tr((A_k - A_bar)(A_k - A_bar)^T) / (n (n - 1) tr(U U^T))
        D = tr(A_bar A_bar^T) / tr(U U^T) - tr^2(A_bar U^T) / tr^2(U U^T)
    and beta = (1 - alpha) * tr(A_bar U^T) / tr(U U^T).

    Args:
        obs: Noisy samples
        target: Target matrix U
        clamp: Project alpha onto [0, 1] and recompute beta from it

    Returns:
        Coefficients of kind BONA_FIDE; raw formula values stay in
        raw_alpha/raw_beta

    Raises:
        DegenerateSampleError: If A_bar is numerically proportional to U
    """
    target_sq = _check_target(obs.shape, target)
    mean, spread = _spread(obs)

    mean_sq = frobenius_norm_sq(mean) / target_sq
    mean_target = frobenius_inner(mean, target.matrix) / target_sq
    denominator = mean_sq - mean_target * mean_target
    if denominator <= DEGENERACY_RATIO * mean_sq:
        raise DegenerateSampleError(
            "Sample mean is proportional to the target matrix; shrinkage is undefined"
        )

    variance_term = spread / (obs.n * (obs.n - 1) * target_sq)
    raw_alpha = 1.0 - variance_term / denominator
    raw_beta = (1.0 - raw_alpha) * mean_target

    if clamp and not 0.0 <= raw_alpha <= 1.0:
        alpha = min(1.0, max(0.0, raw_alpha))
        beta = (1.0 - alpha) * mean_target
        logger.warning(
            f"Clamped bona fide alpha {raw_alpha:.6g} to {alpha:g} (beta {raw_beta:.6g} -> {beta:.6g})"
        )
        return ShrinkageCoefficients(
            alpha=alpha,
            beta=beta,
            kind=CoefficientKind.BONA_FIDE,
            clamped=True,
            raw_alpha=raw_alpha,
            raw_beta=raw_beta,
        )

    logger.debug(f"Bona fide coefficients alpha={raw_alpha:.6g} beta={raw_beta:.6g}")
    return ShrinkageCoefficients(alpha=raw_alpha, beta=raw_beta, kind=CoefficientKind.BONA_FIDE)


def coefficients_finite_sample_oracle(
    a_true: DenseMatrix,
    a_bar: DenseMatrix,
    target: TargetMatrix,
) -> ShrinkageCoefficients:
    """Unique minimiser of g(alpha, beta) = ||alpha A_bar + beta U - A||_F^2.

    Solves the 2 x 2 normal equations; needs the true matrix, so it serves
    as a benchmark only.

    Raises:
        DimensionError: If shapes differ
        DegenerateSampleError: If A_bar is proportional to U (singular Hessian)
    """
    if a_true.shape != a_bar.shape:
        raise DimensionError(f"Shapes differ: {a_true.shape} vs {a_bar.shape}")
    target_sq = _check_target(a_bar.shape, target)

    mean_sq = frobenius_norm_sq(a_bar)
    mean_target = frobenius_inner(a_bar, target.matrix)
    mean_truth = frobenius_inner(a_bar, a_true)
    truth_target = frobenius_inner(a_true, target.matrix)

    determinant = mean_sq * target_sq - mean_target * mean_target
    if determinant <= DEGENERACY_RATIO * mean_sq * target_sq:
        raise DegenerateSampleError("Sample mean is proportional to the target matrix")

    alpha = (mean_truth * target_sq - mean_target * truth_target) / determinant
    beta = (mean_sq * truth_target - mean_target * mean_truth) / determinant
    return ShrinkageCoefficients(alpha=alpha, beta=beta, kind=CoefficientKind.FINITE_SAMPLE_ORACLE)


def coefficients_asymptotic_oracle(
    a_true: DenseMatrix,
    noise_scale: float,
    n: int,
    target: TargetMatrix,
) -> ShrinkageCoefficients:
    """Deterministic-equivalent coefficients in the high-dimensional limit.

    With q = noise_scale / n and
    G = tr(A A^T) / tr(U U^T) - tr^2(A U^T) / tr^2(U U^T) >= 0:
    alpha = G / (G + q) = 1 - q / (G + q), beta = (1 - alpha) tr(A U^T) / tr(U U^T).

    Args:
        a_true: True matrix A
        noise_scale: sigma^2 for i.i.d. noise, (1/m) tr(Sigma) for correlated noise
        n: Number of samples
        target: Target matrix U

    Raises:
        ValueError: If noise_scale < 0 or n < 1
        DegenerateSampleError: If A is proportional to U and noise_scale is 0
    """
    if noise_scale < 0.0:
        raise ValueError(f"noise_scale must be >= 0, got {noise_scale}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    target_sq = _check_target(a_true.shape, target)

    truth_sq = frobenius_norm_sq(a_true) / target_sq
    truth_target = frobenius_inner(a_true, target.matrix) / target_sq
    # Cauchy-Schwarz keeps the gap nonnegative; clip rounding residue
    gap = max(0.0, truth_sq - truth_target * truth_target)
    if gap <= DEGENERACY_RATIO * truth_sq:
        gap = 0.0
    quotient = noise_scale / n

    if gap + quotient == 0.0:
        raise DegenerateSampleError("True matrix is proportional to the target and noise is zero")

    alpha = gap / (gap + quotient)
    beta = quotient / (gap + quotient) * truth_target
    return ShrinkageCoefficients(alpha=alpha, beta=beta, kind=CoefficientKind.ASYMPTOTIC_ORACLE)


def shrunk_matrix(
    obs: ObservationSet,
    target: TargetMatrix,
    clamp: bool = False,
) -> tuple[DenseMatrix, ShrinkageCoefficients]:
    """A* = alpha A_bar + beta U with bona fide coefficients.

    Raises:
        DegenerateSampleError: Propagated from coefficients_bona_fide
    """
    coefficients = coefficients_bona_fide(obs, target, clamp=clamp)
    mean = sample_mean(obs)
    return mean.scaled(coefficients.alpha) + target.matrix.scaled(coefficients.beta), coefficients


def trace_statistics(a_true: DenseMatrix, a_bar: DenseMatrix, target: TargetMatrix) -> TraceStatistics:
    """Empirical trace functionals of the sample mean."""
    target_sq = _check_target(a_bar.shape, target)
    return TraceStatistics(
        mean_sq=frobenius_norm_sq(a_bar) / target_sq,
        mean_target=frobenius_inner(a_bar, target.matrix) / target_sq,
        mean_truth=frobenius_inner(a_bar, a_true) / target_sq,
    )


def trace_equivalents(
    a_true: DenseMatrix,
    target: TargetMatrix,
    noise_scale: float,
    n: int,
) -> TraceStatistics:
    """Deterministic equivalents the empirical trace statistics converge to.

    tr(A_bar A_bar^T) gains noise_scale * m p / n (noise_scale / n per unit
    of tr(U U^T) for the all-ones target); the two cross terms are unbiased.
    """
    target_sq = _check_target(a_true.shape, target)
    truth_sq = frobenius_norm_sq(a_true) / target_sq
    m, p = a_true.shape
    return TraceStatistics(
        mean_sq=truth_sq + noise_scale * m * p / (n * target_sq),
        mean_target=frobenius_inner(a_true, target.matrix) / target_sq,
        mean_truth=truth_sq,
    )


def target_ones(rows: int, cols: int) -> TargetMatrix:
    """All-ones target: shrink every entry toward the mean of A_bar."""
    if rows < 1 or cols < 1:
        raise DimensionError(f"Target dimensions must be positive, got ({rows}, {cols})")
    return TargetMatrix(matrix=DenseMatrix.ones(rows, cols), kind=TargetKind.ONES)


def target_from_matrix(matrix: DenseMatrix, kind: TargetKind) -> TargetMatrix:
    """Wrap a user-supplied target.

    Args:
        matrix: Target entries, e.g. a known multiple of A or a masked pattern
        kind: SCALED_KNOWN or MASKED

    Raises:
        InvalidTargetError: If the matrix is zero or the kind is ONES
    """
    if kind is TargetKind.ONES:
        raise InvalidTargetError("Use target_ones for the all-ones target")
    if not frobenius_norm_sq(matrix) > 0.0:
        raise InvalidTargetError("Target matrix must satisfy tr(U U^T) > 0")
    return TargetMatrix(matrix=matrix, kind=kind)


def target_masked(mask: np.ndarray) -> TargetMatrix:
    """All-ones target with zeros where entries may be scaled but not shifted.

    Args:
        mask: Boolean (m, p) array, True where the entry is shrunk toward 1
    """
    return target_from_matrix(DenseMatrix(np.asarray(mask, dtype=np.float64)), TargetKind.MASKED)


def transpose_observations(obs: ObservationSet) -> ObservationSet:
    """Transpose every sample and swap the row/column correlation tag.

    Row-correlated samples become column-correlated, so the column-noise
    estimators apply with the roles of m and p switched. The map is an
    involution.
    """
    swapped = {
        NoiseTag.ROW_CORRELATED: NoiseTag.COLUMN_CORRELATED,
        NoiseTag.COLUMN_CORRELATED: NoiseTag.ROW_CORRELATED,
        NoiseTag.IID: NoiseTag.IID,
    }[obs.noise_tag]
    return ObservationSet(
        samples=tuple(sample.transpose() for sample in obs.samples),
        noise_tag=swapped,
    )
