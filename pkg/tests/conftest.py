"""Pytest configuration and fixtures."""

from pathlib import Path

import numpy as np
import pytest

from src.adapters.persistence.matrix_csv import CsvMatrixStore
from src.adapters.persistence.record_csv_repository import CsvRecordStore
from src.adapters.solver.cutting_plane import CuttingPlaneSolver
from src.adapters.solver.revised_simplex import RevisedSimplexSolver
from src.domain.models.experiment import (
    ExperimentConfig,
    ExperimentRecord,
    Method,
    RecordStatus,
    SweepMode,
)
from src.domain.models.matrix import DenseMatrix
from src.domain.models.observation import ObservationSet
from src.domain.models.scenario import RngStream
from src.infrastructure.config.settings import Settings, get_settings


@pytest.fixture(autouse=True)
def clear_settings_cache(monkeypatch):
    """Isolate every test from SHRINKLP_* variables and the settings cache."""
    import os

    for name in list(os.environ):
        if name.startswith("SHRINKLP_"):
            monkeypatch.delenv(name)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings() -> Settings:
    """Settings built from defaults only."""
    return Settings(_env_file=None)


@pytest.fixture
def rng() -> RngStream:
    """Fixed random stream."""
    return RngStream(master_seed=42, stream_id=7)


@pytest.fixture
def noisy_pair() -> ObservationSet:
    """m=1, p=2, n=2 samples whose raw bona fide alpha falls below zero."""
    return ObservationSet(
        samples=(DenseMatrix.from_rows([[1.0, 2.0]]), DenseMatrix.from_rows([[3.0, 4.0]]))
    )


@pytest.fixture
def lp_solver() -> RevisedSimplexSolver:
    return RevisedSimplexSolver()


@pytest.fixture
def robust_solver() -> CuttingPlaneSolver:
    return CuttingPlaneSolver()


@pytest.fixture
def matrix_store() -> CsvMatrixStore:
    return CsvMatrixStore()


@pytest.fixture
def record_store() -> CsvRecordStore:
    return CsvRecordStore()


@pytest.fixture
def tiny_config(tmp_path: Path) -> ExperimentConfig:
    """Small sweep that finishes in well under a second per replication."""
    return ExperimentConfig(
        sweep_mode=SweepMode.FIXED_C_VARY_P,
        c_values=[0.5],
        p_values=[6, 8],
        sigma_list=[1.0],
        gamma_factors=[0.5],
        n=5,
        reps=2,
        master_seed=7,
        output_path=str(tmp_path / "results.csv"),
        record_timing=False,
    )


def make_record(
    method: Method = Method.NOMINAL,
    status: RecordStatus = RecordStatus.OPTIMAL,
    rep: int = 0,
    gamma_factor: float | None = None,
    rel_obj: float = 0.1,
    p: int = 10,
    c: float = 0.5,
    sigma: float = 1.0,
) -> ExperimentRecord:
    """Build a record with metrics filled in only for Optimal outcomes."""
    metrics = {}
    if status is RecordStatus.OPTIMAL:
        metrics = {"rel_obj": rel_obj, "viol_mag": 0.2, "viol_ratio": 0.4, "solve_time_ms": 0.0}
    return ExperimentRecord(
        c=c,
        p=p,
        m=round(c * p),
        sigma=sigma,
        n=5,
        method=method,
        gamma_factor=gamma_factor,
        rep=rep,
        seed=123,
        status=status,
        **metrics,
    )


def random_matrix(seed: int, rows: int, cols: int) -> DenseMatrix:
    return DenseMatrix(np.random.default_rng(seed).uniform(-1.0, 1.0, (rows, cols)))
