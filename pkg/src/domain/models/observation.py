"""Observation set domain model."""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from .exceptions import DimensionError, InsufficientSamplesError
from .matrix import DenseMatrix, FloatArray


class NoiseTag(str, Enum):
    """Noise structure the samples were drawn under (metadata only)."""

    IID = "iid"
    COLUMN_CORRELATED = "column_correlated"
    ROW_CORRELATED = "row_correlated"


@dataclass(frozen=True, eq=False)
class ObservationSet:
    """n noisy samples of one unknown m x p matrix.

    Estimators must never branch on ``noise_tag``.
    """

    samples: tuple[DenseMatrix, ...]
    noise_tag: NoiseTag = NoiseTag.IID

    def __post_init__(self) -> None:
        samples = tuple(self.samples)
        if len(samples) < 2:
            raise InsufficientSamplesError(
                f"At least 2 samples are required, got {len(samples)}"
            )
        shape = samples[0].shape
        for index, sample in enumerate(samples[1:], start=1):
            if sample.shape != shape:
                raise DimensionError(
                    f"Sample {index} has shape {sample.shape}, expected {shape}"
                )
        object.__setattr__(self, "samples", samples)

    @property
    def n(self) -> int:
        return len(self.samples)

    @property
    def rows(self) -> int:
        return self.samples[0].rows

    @property
    def cols(self) -> int:
        return self.samples[0].cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.samples[0].shape

    @cached_property
    def stacked(self) -> FloatArray:
        """Samples as one read-only (n, m, p) array."""
        array = np.stack([sample.values for sample in self.samples])
        array.setflags(write=False)
        return array
