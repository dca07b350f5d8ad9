"""Solution quality criteria and per-cell aggregation."""

from collections import defaultdict
from collections.abc import Iterable
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from ..models.exceptions import DimensionError, MetricUndefinedError
from ..models.experiment import AggregateRow, ExperimentRecord, Method, RecordStatus
from ..models.matrix import DenseMatrix

# A constraint counts as violated when a_i^T x - b_i exceeds this
VIOLATION_TOLERANCE = 1e-9
# |true objective| below this makes the relative objective undefined
ZERO_OBJECTIVE = 1e-12


class ViolationMetrics(NamedTuple):
    magnitude: float
    ratio: float


def relative_objective(method_obj: float, true_obj: float) -> float:
    """(method_obj - true_obj) / true_obj, sign preserved.

    Raises:
        MetricUndefinedError: If |true_obj| < 1e-12
    """
    if abs(true_obj) < ZERO_OBJECTIVE:
        raise MetricUndefinedError(f"True objective {true_obj} is too close to zero")
    return (method_obj - true_obj) / true_obj


def violation_metrics(
    a_true: DenseMatrix,
    b: npt.ArrayLike,
    x: npt.ArrayLike,
    tolerance: float = VIOLATION_TOLERANCE,
) -> ViolationMetrics:
    """Mean positive residual and share of violated true constraints.

    magnitude = (1/m) sum_i max(0, a_i^T x - b_i);
    ratio = (1/m) #{i : a_i^T x - b_i > tolerance}.
    """
    rhs = np.asarray(b, dtype=np.float64).reshape(-1)
    point = np.asarray(x, dtype=np.float64).reshape(-1)
    if rhs.shape[0] != a_true.rows or point.shape[0] != a_true.cols:
        raise DimensionError(
            f"A is {a_true.shape}, b has length {rhs.shape[0]}, x has length {point.shape[0]}"
        )
    residual = a_true.values @ point - rhs
    magnitude = float(np.sum(np.maximum(residual, 0.0))) / a_true.rows
    ratio = float(np.count_nonzero(residual > tolerance)) / a_true.rows
    return ViolationMetrics(magnitude=magnitude, ratio=ratio)


def _mean(values: list[float | None]) -> float | None:
    present = [value for value in values if value is not None]
    if not present:
        return None
    return float(sum(present) / len(present))


def aggregate_records(records: Iterable[ExperimentRecord]) -> list[AggregateRow]:
    """Arithmetic means over Optimal records per (cell, method, gamma_factor).

    Non-Optimal records are counted in ``excluded`` and left out of every mean.
    """
    groups: dict[tuple[float, int, float, int, Method, float | None], list[ExperimentRecord]]
    groups = defaultdict(list)
    for record in records:
        key = (record.c, record.p, record.sigma, record.m, record.method, record.gamma_factor)
        groups[key].append(record)

    rows: list[AggregateRow] = []
    for key in sorted(
        groups,
        key=lambda k: (k[0], k[1], k[2], k[4].order, k[5] if k[5] is not None else -1.0),
    ):
        c, p, sigma, m, method, gamma_factor = key
        members = groups[key]
        optimal = [record for record in members if record.status is RecordStatus.OPTIMAL]
        rows.append(
            AggregateRow(
                c=c,
                p=p,
                m=m,
                sigma=sigma,
                n=members[0].n,
                method=method,
                gamma_factor=gamma_factor,
                runs=len(optimal),
                excluded=len(members) - len(optimal),
                rel_obj=_mean([record.rel_obj for record in optimal]),
                viol_mag=_mean([record.viol_mag for record in optimal]),
                viol_ratio=_mean([record.viol_ratio for record in optimal]),
                solve_time_ms=_mean([record.solve_time_ms for record in optimal]),
                alpha_hat=_mean([record.alpha_hat for record in optimal]),
                beta_hat=_mean([record.beta_hat for record in optimal]),
            )
        )
    return rows
