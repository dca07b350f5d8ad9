"""Writes one generated instance as a directory of CSV files plus a manifest."""

import json
import logging
from pathlib import Path
from typing import Any

from ...domain.models.exceptions import SweepIOError
from ...domain.models.observation import ObservationSet
from ...domain.models.scenario import ProblemInstance
from ...domain.ports.matrix_store_port import MatrixStorePort
from ...domain.ports.scenario_writer_port import ScenarioWriterPort

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


class ScenarioBundleWriter(ScenarioWriterPort):
    """Lays out a_true.csv, b.csv, cost.csv, obs_<k>.csv and manifest.json."""

    def __init__(self, matrix_store: MatrixStorePort):
        self.matrix_store = matrix_store

    def write_instance(
        self, directory: Path, instance: ProblemInstance, observations: ObservationSet
    ) -> dict[str, str]:
        """Write the matrices and vectors.

        Returns:
            File names keyed by role
        """
        directory = Path(directory)
        try:
            directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise SweepIOError(f"Cannot create {directory}: {e}") from e

        files = {"a_true": "a_true.csv", "b": "b.csv", "cost": "cost.csv"}
        self.matrix_store.write_matrix(directory / files["a_true"], instance.a_true)
        self.matrix_store.write_vector(directory / files["b"], instance.b)
        self.matrix_store.write_vector(directory / files["cost"], instance.cost)
        for k, sample in enumerate(observations.samples):
            name = f"obs_{k}.csv"
            self.matrix_store.write_matrix(directory / name, sample)
            files[f"obs_{k}"] = name
        return files

    def write_manifest(self, directory: Path, manifest: dict[str, Any]) -> Path:
        path = Path(directory) / MANIFEST_NAME
        try:
            path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        except OSError as e:
            raise SweepIOError(f"Cannot write {path}: {e}") from e
        logger.info(f"Wrote scenario manifest to {path}")
        return path
