"""Experiment configuration and record domain models."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .matrix import CovarianceKind
from .problem import SolveStatus
from .scenario import NoiseModel

RECORD_COLUMNS: tuple[str, ...] = (
    "c",
    "p",
    "m",
    "sigma",
    "n",
    "method",
    "gamma_factor",
    "rep",
    "seed",
    "status",
    "rel_obj",
    "viol_mag",
    "viol_ratio",
    "solve_time_ms",
    "alpha_hat",
    "beta_hat",
    "clamped",
)

AGGREGATE_COLUMNS: tuple[str, ...] = (
    "c",
    "p",
    "m",
    "sigma",
    "n",
    "method",
    "gamma_factor",
    "runs",
    "excluded",
    "rel_obj",
    "viol_mag",
    "viol_ratio",
    "solve_time_ms",
    "alpha_hat",
    "beta_hat",
)


class SweepMode(str, Enum):
    """Which dimension a sweep varies."""

    FIXED_C_VARY_P = "fixed_c_vary_p"
    FIXED_P_VARY_C = "fixed_p_vary_c"


class Method(str, Enum):
    """Optimization formulation compared in a replication."""

    NOMINAL = "nominal"
    SHRINKAGE = "shrinkage"
    ROBUST = "robust"

    @property
    def order(self) -> int:
        return {"nominal": 0, "shrinkage": 1, "robust": 2}[self.value]


class RecordStatus(str, Enum):
    """Outcome stored with each experiment record."""

    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"
    ITERATION_LIMIT = "IterationLimit"
    DEGENERATE_SAMPLE = "DegenerateSample"
    METRIC_UNDEFINED = "MetricUndefined"
    REFERENCE_FAILED = "ReferenceFailed"

    @classmethod
    def from_solve(cls, status: SolveStatus) -> "RecordStatus":
        return cls(status.value)

    def is_solver_failure(self) -> bool:
        """Check if the status counts toward the sweep's solver-failure rate."""
        return self in (
            RecordStatus.INFEASIBLE,
            RecordStatus.UNBOUNDED,
            RecordStatus.ITERATION_LIMIT,
            RecordStatus.REFERENCE_FAILED,
        )


def rows_for(c: float, p: int) -> int:
    """Number of constraints m = round(c * p), rounding halves up."""
    return int(math.floor(c * p + 0.5))


@dataclass(frozen=True, order=True)
class SweepCell:
    """One (c, p, sigma) point of a sweep."""

    c: float
    p: int
    sigma: float

    @property
    def m(self) -> int:
        return rows_for(self.c, self.p)


PROFILES: dict[str, dict[str, Any]] = {
    "desk": {
        "p_values": [100, 200, 300, 400],
        "c_values_vary": [round(0.1 + 0.3 * k, 10) for k in range(10)],
        "p_fixed": [200],
        "c_fixed": [0.5],
        "reps": 20,
    },
    "paper": {
        "p_values": [100 * k for k in range(1, 10)],
        "c_values_vary": [round(0.1 + 0.3 * k, 10) for k in range(10)],
        "p_fixed": [200, 500],
        "c_fixed": [0.5, 1.0, 2.0],
        "reps": 50,
    },
}


class ExperimentConfig(BaseModel):
    """Parameters of a Monte-Carlo sweep.

    The sweep is the cartesian product c_values x p_values x sigma_list;
    ``sweep_mode`` only decides which of c or p is the plotted axis.
    """

    model_config = ConfigDict(frozen=True)

    sweep_mode: SweepMode = SweepMode.FIXED_C_VARY_P
    c_values: list[float] = Field(default_factory=lambda: [0.5])
    p_values: list[int] = Field(default_factory=lambda: [100, 200, 300, 400])
    sigma_list: list[float] = Field(default_factory=lambda: [0.5, 1.0, 2.0])
    gamma_factors: list[float] = Field(default_factory=lambda: [0.2, 0.5, 0.8])
    n: int = Field(ge=2, default=5)
    reps: int = Field(ge=1, default=20)
    noise_model: NoiseModel = NoiseModel.IID_GAUSSIAN
    covariance_kind: CovarianceKind = CovarianceKind.DENSE_WELL_CONDITIONED
    clamp: bool = True
    master_seed: int = 42
    output_path: str = "results.csv"
    record_timing: bool = True
    workers: int = Field(ge=1, default=1)

    @field_validator("c_values", "p_values", "sigma_list")
    @classmethod
    def _non_empty(cls, values: list[Any]) -> list[Any]:
        if not values:
            raise ValueError("sweep ranges must be non-empty")
        return values

    @field_validator("sigma_list")
    @classmethod
    def _positive_sigma(cls, values: list[float]) -> list[float]:
        if any(not sigma > 0.0 for sigma in values):
            raise ValueError(f"all sigma values must be > 0, got {values}")
        return values

    @field_validator("gamma_factors")
    @classmethod
    def _positive_gamma(cls, values: list[float]) -> list[float]:
        if any(not factor > 0.0 for factor in values):
            raise ValueError(f"gamma factors must be > 0, got {values}")
        return values

    @field_validator("c_values")
    @classmethod
    def _positive_c(cls, values: list[float]) -> list[float]:
        if any(not c > 0.0 for c in values):
            raise ValueError(f"c values must be > 0, got {values}")
        return values

    @field_validator("p_values")
    @classmethod
    def _positive_p(cls, values: list[int]) -> list[int]:
        if any(p < 1 for p in values):
            raise ValueError(f"p values must be >= 1, got {values}")
        return values

    @model_validator(mode="after")
    def _check_rows(self) -> "ExperimentConfig":
        for c in self.c_values:
            for p in self.p_values:
                if rows_for(c, p) < 1:
                    raise ValueError(f"m = round({c} * {p}) must be >= 1")
        return self

    @classmethod
    def from_profile(
        cls, profile: str, sweep_mode: SweepMode, **overrides: Any
    ) -> "ExperimentConfig":
        """Build a config from a named profile plus explicit overrides.

        Args:
            profile: "desk" (p <= 400, 20 reps) or "paper" (p <= 900, 50 reps)
            sweep_mode: Axis the sweep varies
            **overrides: Field values that replace the profile's

        Raises:
            KeyError: If the profile name is unknown
        """
        base = PROFILES[profile]
        if sweep_mode is SweepMode.FIXED_C_VARY_P:
            fields: dict[str, Any] = {
                "c_values": base["c_fixed"][:1],
                "p_values": base["p_values"],
            }
        else:
            fields = {"c_values": base["c_values_vary"], "p_values": base["p_fixed"][:1]}
        fields.update(sweep_mode=sweep_mode, reps=base["reps"])
        fields.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**fields)

    def cells(self) -> list[SweepCell]:
        """All sweep cells in deterministic order."""
        return sorted(
            SweepCell(c=float(c), p=int(p), sigma=float(sigma))
            for c in self.c_values
            for p in self.p_values
            for sigma in self.sigma_list
        )

    @property
    def methods_per_replication(self) -> int:
        return 2 + len(self.gamma_factors)


class ExperimentRecord(BaseModel):
    """Metrics of one method in one replication."""

    model_config = ConfigDict(frozen=True)

    c: float
    p: int
    m: int
    sigma: float
    n: int
    method: Method
    gamma_factor: float | None = None
    rep: int = Field(ge=0)
    seed: int
    status: RecordStatus
    rel_obj: float | None = None
    viol_mag: float | None = Field(default=None, ge=0.0)
    viol_ratio: float | None = Field(default=None, ge=0.0, le=1.0)
    solve_time_ms: float | None = Field(default=None, ge=0.0)
    alpha_hat: float | None = None
    beta_hat: float | None = None
    clamped: bool | None = None

    @model_validator(mode="after")
    def _metrics_match_status(self) -> "ExperimentRecord":
        metrics = (self.rel_obj, self.viol_mag, self.viol_ratio, self.solve_time_ms)
        optimal = self.status is RecordStatus.OPTIMAL
        if optimal and any(value is None for value in metrics):
            raise ValueError("Optimal records must carry all metrics")
        if not optimal and any(value is not None for value in metrics):
            raise ValueError(f"{self.status.value} records must not carry metrics")
        return self

    def sort_key(self) -> tuple[float, int, float, int, int, float]:
        return (
            self.c,
            self.p,
            self.sigma,
            self.rep,
            self.method.order,
            self.gamma_factor if self.gamma_factor is not None else -1.0,
        )


class AggregateRow(BaseModel):
    """Mean metrics of one (cell, method, gamma_factor) over Optimal records."""

    model_config = ConfigDict(frozen=True)

    c: float
    p: int
    m: int
    sigma: float
    n: int
    method: Method
    gamma_factor: float | None = None
    runs: int = Field(ge=0)
    excluded: int = Field(ge=0)
    rel_obj: float | None = None
    viol_mag: float | None = None
    viol_ratio: float | None = None
    solve_time_ms: float | None = None
    alpha_hat: float | None = None
    beta_hat: float | None = None

    @property
    def series_label(self) -> str:
        if self.method is Method.ROBUST:
            return f"robust (gamma={self.gamma_factor:g} sigma)"
        return self.method.value
