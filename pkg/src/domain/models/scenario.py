"""Scenario domain models: instance specs and random streams."""

import hashlib
from dataclasses import dataclass
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .matrix import CovarianceKind, CovarianceSpec, DenseMatrix, FloatArray
from .observation import NoiseTag


class NoiseModel(str, Enum):
    """How observation noise is drawn."""

    IID_GAUSSIAN = "iid_gaussian"
    IID_UNIFORM = "iid_uniform"  # mean 0, variance 1 entries scaled by sigma
    COLUMN_CORRELATED = "column_correlated"
    ROW_CORRELATED = "row_correlated"

    @property
    def tag(self) -> NoiseTag:
        if self is NoiseModel.COLUMN_CORRELATED:
            return NoiseTag.COLUMN_CORRELATED
        if self is NoiseModel.ROW_CORRELATED:
            return NoiseTag.ROW_CORRELATED
        return NoiseTag.IID

    @property
    def is_correlated(self) -> bool:
        return self in (NoiseModel.COLUMN_CORRELATED, NoiseModel.ROW_CORRELATED)


class ScenarioSpec(BaseModel):
    """Parameters of one generated instance and its noisy observations."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1)
    p: int = Field(ge=1)
    n: int = Field(ge=2, default=5)
    sigma: float = Field(ge=0.0, default=1.0)
    noise_model: NoiseModel = NoiseModel.IID_GAUSSIAN
    covariance_kind: CovarianceKind = CovarianceKind.DENSE_WELL_CONDITIONED
    covariance_diagonal: tuple[float, ...] | None = None
    entry_low: float = 4.0
    entry_high: float = 6.0

    @model_validator(mode="after")
    def _check_entry_range(self) -> "ScenarioSpec":
        if not self.entry_low < self.entry_high:
            raise ValueError(
                f"entry_low ({self.entry_low}) must be below entry_high ({self.entry_high})"
            )
        return self

    @property
    def covariance_spec(self) -> CovarianceSpec:
        """Root recipe for correlated models, scaled by sigma."""
        if self.covariance_kind is CovarianceKind.DIAGONAL and self.covariance_diagonal:
            return CovarianceSpec(
                kind=CovarianceKind.DIAGONAL,
                scale=self.sigma,
                diagonal=self.covariance_diagonal,
            )
        return CovarianceSpec(kind=self.covariance_kind, scale=self.sigma)


def _hash64(*parts: object) -> int:
    digest = hashlib.blake2b(
        "\x1f".join(repr(part) for part in parts).encode("utf-8"), digest_size=8
    ).digest()
    return int.from_bytes(digest, "big")


@dataclass(frozen=True)
class RngStream:
    """Counter-style random stream identified by (master_seed, stream_id).

    The same pair yields the same draws on every platform (PCG64 seeded
    through a SeedSequence). Child streams are derived by hashing, so
    generation order never affects the draws.
    """

    master_seed: int
    stream_id: int = 0

    @classmethod
    def derive(cls, master_seed: int, *keys: object) -> "RngStream":
        """Stream for a key tuple such as (cell, rep_index, purpose)."""
        return cls(master_seed=master_seed, stream_id=_hash64(*keys))

    def child(self, purpose: str) -> "RngStream":
        return RngStream(self.master_seed, _hash64(self.stream_id, purpose))

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(
            entropy=self.master_seed & 0xFFFFFFFFFFFFFFFF,
            spawn_key=(self.stream_id,),
        )
        return np.random.Generator(np.random.PCG64(sequence))


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """True constraint matrix with the right-hand side and cost shared by all methods."""

    a_true: DenseMatrix
    b: FloatArray
    cost: FloatArray
