"""One Monte-Carlo replication: generate, solve every method, score."""

import logging
import time
from collections.abc import Callable
from typing import Any

from ...domain.models.exceptions import ShrinkLPError
from ...domain.models.experiment import (
    ExperimentConfig,
    ExperimentRecord,
    Method,
    RecordStatus,
    SweepCell,
)
from ...domain.models.problem import ConstrainedProblem, Solution
from ...domain.models.scenario import ProblemInstance, RngStream, ScenarioSpec
from ...domain.models.shrinkage import ShrinkageCoefficients
from ...domain.ports.lp_solver_port import LPSolverPort
from ...domain.services.metrics import relative_objective, violation_metrics
from ...domain.services.robust_counterpart import build_nominal, build_robust, build_shrinkage
from ...domain.services.scenario_generator import generate_instance, generate_observations
from ...domain.services.shrinkage_estimator import sample_mean, shrunk_matrix, target_ones

logger = logging.getLogger(__name__)


def replication_stream(master_seed: int, cell: SweepCell, rep: int) -> RngStream:
    """Stream of one replication; independent of the order replications run in."""
    return RngStream.derive(master_seed, cell.c, cell.p, cell.sigma, rep)


class RunReplicationUseCase:
    """Evaluate nominal, shrinkage and robust methods on one generated instance.

    The true-model LP gives the reference objective. A replication whose
    reference solve fails yields ReferenceFailed records for every method.
    """

    def __init__(
        self,
        lp_solver: LPSolverPort,
        robust_solver: LPSolverPort,
        clock: Callable[[], float] = time.perf_counter,
    ):
        """Initialize use case.

        Args:
            lp_solver: Solver for problems with robust_radius == 0
            robust_solver: Solver for problems with robust_radius > 0
            clock: Seconds counter used for solve timing
        """
        self.lp_solver = lp_solver
        self.robust_solver = robust_solver
        self.clock = clock

    def execute(self, cell: SweepCell, rep: int, config: ExperimentConfig) -> list[ExperimentRecord]:
        """Run one replication.

        Returns:
            1 nominal + 1 shrinkage + len(gamma_factors) robust records
        """
        stream = replication_stream(config.master_seed, cell, rep)
        spec = ScenarioSpec(
            m=cell.m,
            p=cell.p,
            n=config.n,
            sigma=cell.sigma,
            noise_model=config.noise_model,
            covariance_kind=config.covariance_kind,
        )
        instance = generate_instance(spec, stream.child("instance"))
        observations = generate_observations(instance.a_true, spec, stream.child("observations"))

        base: dict[str, Any] = {
            "c": cell.c,
            "p": cell.p,
            "m": cell.m,
            "sigma": cell.sigma,
            "n": config.n,
            "rep": rep,
            "seed": stream.stream_id,
        }

        reference = self.lp_solver.solve(build_nominal(instance.a_true, instance.b, instance.cost))
        shrinkage_problem: ConstrainedProblem | None = None
        coefficients: ShrinkageCoefficients | None = None
        try:
            a_star, coefficients = shrunk_matrix(
                observations, target_ones(cell.m, cell.p), clamp=config.clamp
            )
            shrinkage_problem = build_shrinkage(a_star, instance.b, instance.cost)
        except ShrinkLPError as e:
            if not e.code.is_recoverable():
                raise
            logger.warning(f"Replication {rep} of {cell}: {e}")

        a_bar = sample_mean(observations)
        plan: list[tuple[Method, float | None, ConstrainedProblem | None]] = [
            (Method.NOMINAL, None, build_nominal(a_bar, instance.b, instance.cost)),
            (Method.SHRINKAGE, None, shrinkage_problem),
        ]
        for factor in config.gamma_factors:
            gamma = factor * cell.sigma
            plan.append((Method.ROBUST, factor, build_robust(a_bar, instance.b, instance.cost, gamma)))

        records = []
        for method, factor, problem in plan:
            fields = dict(base, method=method, gamma_factor=factor)
            if method is Method.SHRINKAGE:
                fields.update(self._coefficient_fields(coefficients))

            if not reference.is_optimal:
                records.append(ExperimentRecord(**fields, status=RecordStatus.REFERENCE_FAILED))
            elif problem is None:
                records.append(ExperimentRecord(**fields, status=RecordStatus.DEGENERATE_SAMPLE))
            else:
                records.append(self._evaluate(problem, instance, reference, fields, config))

        if not reference.is_optimal:
            logger.error(f"Reference solve {reference.status.value} in replication {rep} of {cell}")
        return records

    def _evaluate(
        self,
        problem: ConstrainedProblem,
        instance: ProblemInstance,
        reference: Solution,
        fields: dict[str, Any],
        config: ExperimentConfig,
    ) -> ExperimentRecord:
        solver = self.robust_solver if problem.is_robust else self.lp_solver
        started = self.clock()
        solution = solver.solve(problem)
        elapsed_ms = (self.clock() - started) * 1000.0

        if not solution.is_optimal:
            logger.warning(
                f"{fields['method'].value} solve returned {solution.status.value} "
                f"(c={fields['c']}, p={fields['p']}, sigma={fields['sigma']}, rep={fields['rep']})"
            )
            return ExperimentRecord(**fields, status=RecordStatus.from_solve(solution.status))

        assert solution.x is not None and solution.objective is not None
        assert reference.objective is not None
        try:
            rel_obj = relative_objective(solution.objective, reference.objective)
        except ShrinkLPError as e:
            if not e.code.is_recoverable():
                raise
            logger.warning(str(e))
            return ExperimentRecord(**fields, status=RecordStatus.METRIC_UNDEFINED)

        violation = violation_metrics(instance.a_true, instance.b, solution.x)
        return ExperimentRecord(
            **fields,
            status=RecordStatus.OPTIMAL,
            rel_obj=rel_obj,
            viol_mag=violation.magnitude,
            viol_ratio=violation.ratio,
            solve_time_ms=elapsed_ms if config.record_timing else 0.0,
        )

    @staticmethod
    def _coefficient_fields(coefficients: ShrinkageCoefficients | None) -> dict[str, Any]:
        if coefficients is None:
            return {}
        return {
            "alpha_hat": coefficients.alpha,
            "beta_hat": coefficients.beta,
            "clamped": coefficients.clamped,
        }
