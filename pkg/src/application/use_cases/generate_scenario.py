"""Generate and export a single reproducible instance."""

import logging
from pathlib import Path

from ...domain.models.scenario import RngStream, ScenarioSpec
from ...domain.ports.scenario_writer_port import ScenarioWriterPort
from ...domain.services.scenario_generator import generate_instance, generate_observations
from ..dto.scenario_dto import GeneratedScenario

logger = logging.getLogger(__name__)


def scenario_streams(master_seed: int) -> tuple[RngStream, RngStream]:
    """Instance and observation streams of a standalone scenario."""
    base = RngStream.derive(master_seed, "scenario")
    return base.child("instance"), base.child("observations")


class GenerateScenarioUseCase:
    """Draw A, b, cost and n noisy samples and write them with a manifest."""

    def __init__(self, scenario_writer: ScenarioWriterPort):
        self.scenario_writer = scenario_writer

    def execute(self, spec: ScenarioSpec, master_seed: int, directory: Path) -> GeneratedScenario:
        instance_rng, observation_rng = scenario_streams(master_seed)
        instance = generate_instance(spec, instance_rng)
        observations = generate_observations(instance.a_true, spec, observation_rng)

        files = self.scenario_writer.write_instance(directory, instance, observations)
        scenario = GeneratedScenario(
            spec=spec,
            master_seed=master_seed,
            directory=Path(directory),
            streams={
                "instance": instance_rng.stream_id,
                "observations": observation_rng.stream_id,
            },
            files=files,
        )
        self.scenario_writer.write_manifest(directory, scenario.manifest())
        logger.info(f"Generated {spec.m}x{spec.p} scenario with {spec.n} samples in {directory}")
        return scenario
