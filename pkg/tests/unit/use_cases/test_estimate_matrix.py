"""Tests for EstimateMatrixUseCase."""

import numpy as np
import pytest

from src.application.use_cases.estimate_matrix import EstimateMatrixUseCase
from src.domain.models.exceptions import (
    ConfigurationError,
    DimensionError,
    InsufficientSamplesError,
)
from src.domain.models.matrix import DenseMatrix


@pytest.fixture
def sample_files(tmp_path, matrix_store):
    """Two 1x2 samples whose raw coefficients are (-3, 10) for the ones target."""
    paths = [tmp_path / "obs_0.csv", tmp_path / "obs_1.csv"]
    matrix_store.write_matrix(paths[0], DenseMatrix.from_rows([[1.0, 2.0]]))
    matrix_store.write_matrix(paths[1], DenseMatrix.from_rows([[3.0, 4.0]]))
    return paths


@pytest.mark.unit
class TestEstimateMatrixUseCase:
    """Test estimating A* from sample files."""

    def test_ones_target_raw(self, sample_files, matrix_store, tmp_path):
        """Test unclamped coefficients and the written estimate."""
        output = tmp_path / "a_star.csv"
        report = EstimateMatrixUseCase(matrix_store).execute(sample_files, "ones", output)

        assert report.coefficients.as_tuple() == pytest.approx((-3.0, 10.0))
        assert report.coefficients.clamped is False
        assert report.output_path == output
        assert matrix_store.read_matrix(output).values == pytest.approx(np.array([[4.0, 1.0]]))
        assert "loss_shrunk" not in report.to_dict()

    def test_ones_target_clamped(self, sample_files, matrix_store, tmp_path):
        """Test clamping projects alpha onto [0, 1]."""
        output = tmp_path / "a_star.csv"
        report = EstimateMatrixUseCase(matrix_store).execute(sample_files, "ones", output, clamp=True)

        assert report.coefficients.as_tuple() == pytest.approx((0.0, 2.5))
        assert report.coefficients.clamped is True
        assert matrix_store.read_matrix(output).values == pytest.approx(np.array([[2.5, 2.5]]))

    def test_truth_losses(self, sample_files, matrix_store, tmp_path):
        """Test Frobenius losses against a supplied true matrix."""
        truth = tmp_path / "a_true.csv"
        matrix_store.write_matrix(truth, DenseMatrix.from_rows([[2.0, 3.0]]))

        report = EstimateMatrixUseCase(matrix_store).execute(
            sample_files, "ones", tmp_path / "a_star.csv", clamp=True, truth_path=truth
        )

        assert report.loss_shrunk == pytest.approx(0.5)
        assert report.loss_mean == pytest.approx(0.0)
        assert report.to_dict()["loss_shrunk"] == pytest.approx(0.5)

    def test_file_target(self, sample_files, matrix_store, tmp_path):
        """Test a file target equal to the ones matrix gives the same coefficients."""
        target = tmp_path / "target.csv"
        matrix_store.write_matrix(target, DenseMatrix.from_rows([[1.0, 1.0]]))
        report = EstimateMatrixUseCase(matrix_store).execute(
            sample_files, f"file:{target}", tmp_path / "a_star.csv"
        )
        assert report.coefficients.as_tuple() == pytest.approx((-3.0, 10.0))

    def test_mask_target(self, sample_files, matrix_store, tmp_path):
        """Test masked entries are scaled but not shifted."""
        mask = tmp_path / "mask.csv"
        matrix_store.write_matrix(mask, DenseMatrix.from_rows([[1.0, 0.0]]))
        output = tmp_path / "a_star.csv"
        report = EstimateMatrixUseCase(matrix_store).execute(sample_files, f"mask:{mask}", output)

        alpha, beta = report.coefficients.as_tuple()
        estimate = matrix_store.read_matrix(output).values
        assert estimate == pytest.approx(np.array([[2.0 * alpha + beta, 3.0 * alpha]]))

    def test_unknown_target(self, sample_files, matrix_store, tmp_path):
        """Test an unknown target spec is a configuration error."""
        with pytest.raises(ConfigurationError):
            EstimateMatrixUseCase(matrix_store).execute(sample_files, "diag", tmp_path / "out.csv")
        with pytest.raises(ConfigurationError):
            EstimateMatrixUseCase(matrix_store).execute(sample_files, "file:", tmp_path / "out.csv")

    def test_target_shape_mismatch(self, sample_files, matrix_store, tmp_path):
        """Test a target of the wrong shape is rejected."""
        target = tmp_path / "target.csv"
        matrix_store.write_matrix(target, DenseMatrix.ones(2, 2))
        with pytest.raises(DimensionError):
            EstimateMatrixUseCase(matrix_store).execute(
                sample_files, f"file:{target}", tmp_path / "out.csv"
            )

    def test_truth_shape_mismatch(self, sample_files, matrix_store, tmp_path):
        """Test a truth of the wrong shape is rejected."""
        truth = tmp_path / "a_true.csv"
        matrix_store.write_matrix(truth, DenseMatrix.ones(2, 2))
        with pytest.raises(DimensionError):
            EstimateMatrixUseCase(matrix_store).execute(
                sample_files, "ones", tmp_path / "out.csv", truth_path=truth
            )

    def test_single_sample(self, sample_files, matrix_store, tmp_path):
        """Test one sample file is not enough."""
        with pytest.raises(InsufficientSamplesError):
            EstimateMatrixUseCase(matrix_store).execute(sample_files[:1], "ones", tmp_path / "out.csv")
