"""Scenario bundle writer port interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any

from ..models.observation import ObservationSet
from ..models.scenario import ProblemInstance


class ScenarioWriterPort(ABC):
    """Interface for exporting one generated instance."""

    @abstractmethod
    def write_instance(
        self, directory: Path, instance: ProblemInstance, observations: ObservationSet
    ) -> dict[str, str]:
        """Write the instance and its samples.

        Returns:
            Written file names keyed by role
        """
        pass

    @abstractmethod
    def write_manifest(self, directory: Path, manifest: dict[str, Any]) -> Path:
        pass
