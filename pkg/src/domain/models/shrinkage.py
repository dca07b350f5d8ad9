"""Shrinkage coefficient and target matrix domain models."""

import math
from dataclasses import dataclass
from enum import Enum

from .exceptions import InvalidTargetError
from .matrix import DenseMatrix


class CoefficientKind(str, Enum):
    """Where a coefficient pair came from."""

    FINITE_SAMPLE_ORACLE = "finite_sample_oracle"
    ASYMPTOTIC_ORACLE = "asymptotic_oracle"
    BONA_FIDE = "bona_fide"


class TargetKind(str, Enum):
    """Prior information encoded in the target matrix."""

    ONES = "ones"
    SCALED_KNOWN = "scaled_known"
    MASKED = "masked"


@dataclass(frozen=True)
class ShrinkageCoefficients:
    """Coefficients (alpha, beta) of the estimate alpha * A_bar + beta * U.

    ``raw_alpha``/``raw_beta`` keep the formula values before clamping;
    they equal ``alpha``/``beta`` whenever ``clamped`` is False.
    """

    alpha: float
    beta: float
    kind: CoefficientKind
    clamped: bool = False
    raw_alpha: float | None = None
    raw_beta: float | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValueError(f"Coefficients must be finite, got ({self.alpha}, {self.beta})")
        if self.raw_alpha is None:
            object.__setattr__(self, "raw_alpha", self.alpha)
        if self.raw_beta is None:
            object.__setattr__(self, "raw_beta", self.beta)
        if self.clamped and not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"Clamped alpha must lie in [0, 1], got {self.alpha}")

    def as_tuple(self) -> tuple[float, float]:
        return self.alpha, self.beta


@dataclass(frozen=True)
class TargetMatrix:
    """Target matrix U the sample mean is shrunk toward."""

    matrix: DenseMatrix
    kind: TargetKind = TargetKind.ONES

    def __post_init__(self) -> None:
        if not bool((self.matrix.values != 0.0).any()):
            raise InvalidTargetError("Target matrix must be nonzero (tr(U U^T) > 0)")

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape
