"""Generated scenario DTO."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ...domain.models.scenario import ScenarioSpec


@dataclass
class GeneratedScenario:
    """Files written for one generated instance.

    Attributes:
        spec: Scenario parameters
        master_seed: Seed the instance and noise streams derive from
        directory: Output directory
        streams: Stream ids of the instance and observation draws
        files: Written file names keyed by role ("a_true", "b", "cost", "obs_0", ...)
    """

    spec: ScenarioSpec
    master_seed: int
    directory: Path
    streams: dict[str, int] = field(default_factory=dict)
    files: dict[str, str] = field(default_factory=dict)

    def manifest(self) -> dict[str, Any]:
        return {
            "spec": self.spec.model_dump(mode="json"),
            "master_seed": self.master_seed,
            "streams": dict(self.streams),
            "files": dict(self.files),
        }
