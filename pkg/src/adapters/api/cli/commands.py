"""Command-line surface: simulate, plot, estimate, generate."""

import argparse
import json
import logging
import math
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from ....domain.models.error_codes import ErrorCode
from ....domain.models.exceptions import ConfigurationError
from ....domain.models.experiment import ExperimentConfig, SweepMode
from ....domain.models.matrix import CovarianceKind
from ....domain.models.scenario import NoiseModel, ScenarioSpec
from ....infrastructure.config.settings import Settings
from ....infrastructure.dependency_injection.container import Container

logger = logging.getLogger(__name__)

MODES = {"fixed-c": SweepMode.FIXED_C_VARY_P, "fixed-p": SweepMode.FIXED_P_VARY_C}
NOISE_MODELS = {
    "iid": NoiseModel.IID_GAUSSIAN,
    "iid-uniform": NoiseModel.IID_UNIFORM,
    "col-corr": NoiseModel.COLUMN_CORRELATED,
    "row-corr": NoiseModel.ROW_CORRELATED,
}
COVARIANCES = {
    "dense": CovarianceKind.DENSE_WELL_CONDITIONED,
    "diagonal": CovarianceKind.DIAGONAL,
    "identity": CovarianceKind.IDENTITY_SCALED,
}


def parse_values(text: str) -> list[float]:
    """Parse "a,b,c" or an inclusive range "start:stop:step"."""
    try:
        if ":" in text:
            start, stop, step = (float(part) for part in text.split(":"))
            if step <= 0.0 or stop < start:
                raise ValueError
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            return [round(start + k * step, 10) for k in range(count)]
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"'{text}' is neither a comma list nor start:stop:step"
        ) from None


def parse_int_values(text: str) -> list[int]:
    values = parse_values(text)
    if any(value != int(value) for value in values):
        raise argparse.ArgumentTypeError(f"'{text}' must contain integers")
    return [int(value) for value in values]


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shrinklp",
        description="Linear shrinkage for noisy linear programs: estimation, solving and simulation.",
    )
    parser.add_argument("--log-level", default=None, help=f"default {settings.log_level}")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    commands = parser.add_subparsers(dest="command", required=True)

    simulate = commands.add_parser("simulate", help="run a Monte-Carlo sweep")
    simulate.add_argument("--mode", choices=sorted(MODES), default=None)
    simulate.add_argument("--c", type=parse_values, default=None, help="0.5 or 0.1:2.8:0.3")
    simulate.add_argument("--p", type=parse_int_values, default=None, help="200 or 100:900:100")
    simulate.add_argument("--sigma", type=parse_values, default=None)
    simulate.add_argument("--n", type=int, default=None)
    simulate.add_argument("--reps", type=int, default=None)
    simulate.add_argument("--gamma-factors", type=parse_values, default=None)
    simulate.add_argument("--noise", choices=sorted(NOISE_MODELS), default=None)
    simulate.add_argument("--covariance", choices=sorted(COVARIANCES), default=None)
    simulate.add_argument("--seed", type=int, default=None)
    simulate.add_argument("--clamp", action=argparse.BooleanOptionalAction, default=None)
    simulate.add_argument("--out", default=None)
    simulate.add_argument("--config", type=Path, default=None, help="JSON file mirroring the sweep config")
    simulate.add_argument("--profile", choices=["desk", "paper"], default=None)
    simulate.add_argument("--workers", type=int, default=None)
    simulate.add_argument("--no-timing", action="store_true", help="write solve_time_ms = 0")

    plot = commands.add_parser("plot", help="draw SVG charts from an aggregate CSV")
    plot.add_argument("--in", dest="input", type=Path, required=True)
    plot.add_argument("--out", type=Path, required=True)

    estimate = commands.add_parser("estimate", help="shrink the mean of sample matrices")
    estimate.add_argument("samples", nargs="+", type=Path, help="sample matrix CSV files")
    estimate.add_argument("--target", default="ones", help="ones, file:<path> or mask:<path>")
    estimate.add_argument("--clamp", action="store_true")
    estimate.add_argument("--out", type=Path, required=True, help="where A* is written")
    estimate.add_argument("--truth", type=Path, default=None, help="true matrix; adds losses to the report")

    generate = commands.add_parser("generate", help="write one instance and its samples")
    generate.add_argument("--m", type=int, required=True)
    generate.add_argument("--p", type=int, required=True)
    generate.add_argument("--n", type=int, default=5)
    generate.add_argument("--sigma", type=float, default=1.0)
    generate.add_argument("--noise", choices=sorted(NOISE_MODELS), default="iid")
    generate.add_argument("--covariance", choices=sorted(COVARIANCES), default="dense")
    generate.add_argument("--seed", type=int, default=42)
    generate.add_argument("--out", type=Path, required=True)

    return parser


def build_experiment_config(args: argparse.Namespace, settings: Settings) -> ExperimentConfig:
    """Profile, then --config file values, then explicit flags.

    Raises:
        ConfigurationError: If the file cannot be read or values are invalid
    """
    values: dict[str, Any] = {}
    if args.config is not None:
        try:
            values = json.loads(args.config.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"Cannot load config {args.config}: {e}") from e
        if not isinstance(values, dict):
            raise ConfigurationError(f"{args.config} must hold a JSON object")

    flags = {
        "c_values": args.c,
        "p_values": args.p,
        "sigma_list": args.sigma,
        "gamma_factors": args.gamma_factors,
        "n": args.n,
        "reps": args.reps,
        "noise_model": NOISE_MODELS[args.noise] if args.noise else None,
        "covariance_kind": COVARIANCES[args.covariance] if args.covariance else None,
        "master_seed": args.seed,
        "clamp": args.clamp,
        "output_path": args.out,
        "workers": args.workers,
        "record_timing": False if args.no_timing else None,
    }
    values.update({key: value for key, value in flags.items() if value is not None})
    values.setdefault("workers", settings.workers)
    values.setdefault("record_timing", settings.record_timing)

    profile = args.profile or values.pop("profile", None) or settings.default_profile
    try:
        mode = MODES[args.mode] if args.mode else SweepMode(values.pop("sweep_mode", SweepMode.FIXED_C_VARY_P))
        values.pop("sweep_mode", None)
        return ExperimentConfig.from_profile(profile, mode, **values)
    except (ValidationError, ValueError, KeyError) as e:
        raise ConfigurationError(f"Invalid sweep configuration: {e}") from e


def run_simulate(args: argparse.Namespace, container: Container) -> int:
    config = build_experiment_config(args, container.settings)
    summary = container.run_sweep_use_case().execute(config)
    if summary.exceeds_failure_limit:
        logger.error(
            f"Solver failure rate {summary.failure_rate:.1%} exceeds the 10% limit "
            f"({summary.solver_failures} of {summary.record_count} records)"
        )
        return ErrorCode.SOLVER_FAILURE_RATE.exit_code()
    logger.info(f"Records: {summary.records_path}; aggregates: {summary.aggregates_path}")
    return 0


def run_plot(args: argparse.Namespace, container: Container) -> int:
    container.emit_plots_use_case().execute(args.input, args.out)
    return 0


def run_estimate(args: argparse.Namespace, container: Container) -> int:
    report = container.estimate_matrix_use_case().execute(
        sample_paths=args.samples,
        target_spec=args.target,
        output_path=args.out,
        clamp=args.clamp,
        truth_path=args.truth,
    )
    print(json.dumps(report.to_dict()))
    return 0


def run_generate(args: argparse.Namespace, container: Container) -> int:
    try:
        spec = ScenarioSpec(
            m=args.m,
            p=args.p,
            n=args.n,
            sigma=args.sigma,
            noise_model=NOISE_MODELS[args.noise],
            covariance_kind=COVARIANCES[args.covariance],
        )
    except ValidationError as e:
        raise ConfigurationError(f"Invalid scenario: {e}") from e
    container.generate_scenario_use_case().execute(spec, args.seed, args.out)
    return 0


HANDLERS = {
    "simulate": run_simulate,
    "plot": run_plot,
    "estimate": run_estimate,
    "generate": run_generate,
}
