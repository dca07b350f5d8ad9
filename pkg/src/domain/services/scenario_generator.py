"""Seedable generation of problem instances and noisy observations."""

import logging
import math

import numpy as np

from ..models.matrix import DenseMatrix
from ..models.observation import ObservationSet
from ..models.scenario import NoiseModel, ProblemInstance, RngStream, ScenarioSpec
from .linear_algebra import covariance_trace_ratio, make_spd_root

logger = logging.getLogger(__name__)

_UNIFORM_HALF_WIDTH = math.sqrt(3.0)  # U(-sqrt 3, sqrt 3) has variance 1


def generate_instance(spec: ScenarioSpec, rng: RngStream) -> ProblemInstance:
    """Draw A, b and cost with i.i.d. Uniform(entry_low, entry_high) entries."""
    generator = rng.generator()
    low, high = spec.entry_low, spec.entry_high
    a_true = generator.uniform(low, high, (spec.m, spec.p))
    b = generator.uniform(low, high, spec.m)
    cost = generator.uniform(low, high, spec.p)
    b.setflags(write=False)
    cost.setflags(write=False)
    return ProblemInstance(a_true=DenseMatrix(a_true), b=b, cost=cost)


def covariance_root(spec: ScenarioSpec, rng: RngStream) -> DenseMatrix | None:
    """Sigma^{1/2} used by generate_observations for the same stream.

    Returns:
        Root of size m (column-correlated) or p (row-correlated); None for
        i.i.d. models
    """
    if not spec.noise_model.is_correlated:
        return None
    size = spec.m if spec.noise_model is NoiseModel.COLUMN_CORRELATED else spec.p
    return make_spd_root(size, spec.covariance_spec, rng.child("covariance"))


def true_noise_scale(spec: ScenarioSpec, root: DenseMatrix | None) -> float:
    """sigma^2 for i.i.d. noise, (1/size) tr(Sigma) for correlated noise."""
    if root is None:
        return spec.sigma * spec.sigma
    return covariance_trace_ratio(root)


def generate_observations(
    a_true: DenseMatrix, spec: ScenarioSpec, rng: RngStream
) -> ObservationSet:
    """Draw n noisy samples of a_true.

    iid_gaussian: A + sigma E; iid_uniform: A + sigma E with unit-variance
    uniform E; column_correlated: A + R E with R of size m;
    row_correlated: A + E R with R of size p. E has standard normal entries
    unless stated otherwise.
    """
    if a_true.shape != (spec.m, spec.p):
        raise ValueError(f"a_true has shape {a_true.shape}, spec says {(spec.m, spec.p)}")

    generator = rng.child("noise").generator()
    shape = (spec.n, spec.m, spec.p)
    model = spec.noise_model

    if model is NoiseModel.IID_GAUSSIAN:
        noise = spec.sigma * generator.standard_normal(shape)
    elif model is NoiseModel.IID_UNIFORM:
        noise = spec.sigma * generator.uniform(-_UNIFORM_HALF_WIDTH, _UNIFORM_HALF_WIDTH, shape)
    else:
        root = covariance_root(spec, rng)
        assert root is not None
        draws = generator.standard_normal(shape)
        if model is NoiseModel.COLUMN_CORRELATED:
            noise = np.matmul(root.values, draws)
        else:
            noise = np.matmul(draws, root.values)

    samples = tuple(DenseMatrix(a_true.values + noise[k]) for k in range(spec.n))
    logger.debug(f"Generated {spec.n} samples of shape {a_true.shape} under {model.value}")
    return ObservationSet(samples=samples, noise_tag=model.tag)
