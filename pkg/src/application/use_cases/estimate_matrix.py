"""Estimate a constraint matrix from noisy sample files."""

import logging
from pathlib import Path

from ...domain.models.exceptions import ConfigurationError, DimensionError
from ...domain.models.observation import ObservationSet
from ...domain.models.shrinkage import TargetKind, TargetMatrix
from ...domain.ports.matrix_store_port import MatrixStorePort
from ...domain.services.linear_algebra import frobenius_loss
from ...domain.services.shrinkage_estimator import (
    noise_level_hat,
    sample_mean,
    shrunk_matrix,
    target_from_matrix,
    target_masked,
    target_ones,
)
from ..dto.estimate_dto import EstimateReport

logger = logging.getLogger(__name__)


class EstimateMatrixUseCase:
    """Compute A* = alpha A_bar + beta U with bona fide coefficients.

    Target specs:
        ``ones``              all-ones matrix
        ``file:<path>``       a known matrix, e.g. a scaled copy of A
        ``mask:<path>``       0/1 matrix; entries at 0 are only scaled
    """

    def __init__(self, matrix_store: MatrixStorePort):
        self.matrix_store = matrix_store

    def execute(
        self,
        sample_paths: list[Path],
        target_spec: str,
        output_path: Path,
        clamp: bool = False,
        truth_path: Path | None = None,
    ) -> EstimateReport:
        """Read samples, estimate A*, write it and report the coefficients.

        Raises:
            InsufficientSamplesError: Fewer than two sample files
            DimensionError: Samples, target or truth disagree in shape
            DegenerateSampleError: A_bar is proportional to the target
            ConfigurationError: Unknown target spec
        """
        samples = tuple(self.matrix_store.read_matrix(path) for path in sample_paths)
        observations = ObservationSet(samples=samples)
        target = self._target(target_spec, observations.shape)
        logger.info(
            f"Estimating a {observations.rows}x{observations.cols} matrix "
            f"from {observations.n} samples, target={target.kind.value}"
        )

        estimate, coefficients = shrunk_matrix(observations, target, clamp=clamp)
        self.matrix_store.write_matrix(output_path, estimate)
        report = EstimateReport(
            coefficients=coefficients,
            noise_level_hat=noise_level_hat(observations),
            output_path=Path(output_path),
        )

        if truth_path is not None:
            truth = self.matrix_store.read_matrix(truth_path)
            if truth.shape != observations.shape:
                raise DimensionError(f"Truth has shape {truth.shape}, samples {observations.shape}")
            report.loss_shrunk = frobenius_loss(estimate, truth)
            report.loss_mean = frobenius_loss(sample_mean(observations), truth)

        logger.info(f"Wrote estimate to {output_path}")
        return report

    def _target(self, spec: str, shape: tuple[int, int]) -> TargetMatrix:
        if spec == "ones":
            return target_ones(*shape)
        kind, _, location = spec.partition(":")
        if not location or kind not in ("file", "mask"):
            raise ConfigurationError(f"Unknown target '{spec}'; use ones, file:<path> or mask:<path>")

        matrix = self.matrix_store.read_matrix(Path(location))
        if matrix.shape != shape:
            raise DimensionError(f"Target has shape {matrix.shape}, samples {shape}")
        if kind == "mask":
            return target_masked(matrix.values != 0.0)
        return target_from_matrix(matrix, TargetKind.SCALED_KNOWN)
