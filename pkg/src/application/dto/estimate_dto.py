"""Estimate command result DTO."""

from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ...domain.models.shrinkage import ShrinkageCoefficients


@dataclass
class EstimateReport:
    """Outcome of estimating A* from observation files.

    Attributes:
        coefficients: Bona fide coefficients actually applied
        noise_level_hat: Estimated noise scale of the samples
        output_path: Where A* was written
        loss_shrunk: ||A* - A||_F^2 when the true matrix was supplied
        loss_mean: ||A_bar - A||_F^2 when the true matrix was supplied
    """

    coefficients: ShrinkageCoefficients
    noise_level_hat: float
    output_path: Path
    loss_shrunk: float | None = None
    loss_mean: float | None = None

    def to_dict(self) -> dict[str, Any]:
        """One-line JSON report; loss keys only appear when a truth was given."""
        report: dict[str, Any] = {
            "alpha": self.coefficients.alpha,
            "beta": self.coefficients.beta,
            "clamped": self.coefficients.clamped,
            "noise_level_hat": self.noise_level_hat,
        }
        if self.loss_shrunk is not None:
            report["loss_shrunk"] = self.loss_shrunk
            report["loss_mean"] = self.loss_mean
        return report
