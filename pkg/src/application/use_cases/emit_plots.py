"""Turn a sweep's aggregate file into line charts."""

import logging
from collections import defaultdict
from pathlib import Path

from ...domain.models.exceptions import SchemaError
from ...domain.models.experiment import AggregateRow, Method
from ...domain.ports.chart_renderer_port import ChartRendererPort, ChartSeries, LineChart
from ...domain.ports.record_store_port import RecordStorePort

logger = logging.getLogger(__name__)

CRITERIA: tuple[tuple[str, str], ...] = (
    ("rel_obj", "Relative objective"),
    ("viol_mag", "Violation magnitude"),
    ("viol_ratio", "Violation ratio"),
)
TIME_CRITERION = ("solve_time_ms", "Solve time (ms)")

METHOD_COLORS = {Method.NOMINAL: "#1f77b4", Method.SHRINKAGE: "#ff7f0e"}
ROBUST_COLORS = ("#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


def _series_order(row: AggregateRow) -> tuple[int, float]:
    return row.method.order, row.gamma_factor if row.gamma_factor is not None else -1.0


class EmitPlotsUseCase:
    """One chart per (sigma, criterion) plus one solve-time chart per sigma.

    The x axis is p when some c carries several p values, otherwise c.
    Each method, and each robust gamma factor, is one series.
    """

    def __init__(self, record_store: RecordStorePort, chart_renderer: ChartRendererPort):
        self.record_store = record_store
        self.chart_renderer = chart_renderer

    def execute(self, aggregates_path: Path, out_dir: Path) -> list[Path]:
        """Render all charts.

        Returns:
            Written SVG paths in rendering order

        Raises:
            SchemaError: If the file is empty or lacks columns
        """
        rows = self.record_store.read_aggregates(aggregates_path)
        if not rows:
            raise SchemaError(f"{aggregates_path} has no rows")

        p_per_c: dict[float, set[int]] = defaultdict(set)
        for row in rows:
            p_per_c[row.c].add(row.p)
        vary_p = max(len(values) for values in p_per_c.values()) > 1
        x_name, other_name = ("p", "c") if vary_p else ("c", "p")
        several_others = len({getattr(row, other_name) for row in rows}) > 1

        robust_factors = sorted({row.gamma_factor for row in rows if row.gamma_factor is not None})
        written = []
        for sigma in sorted({row.sigma for row in rows}):
            subset = [row for row in rows if row.sigma == sigma]
            for column, title in (*CRITERIA, TIME_CRITERION):
                chart = LineChart(
                    title=f"{title}, sigma = {sigma:g}",
                    x_label=x_name,
                    y_label=title,
                    series=self._series(subset, column, x_name, other_name, several_others, robust_factors),
                )
                path = Path(out_dir) / f"{column}_sigma{sigma:g}.svg"
                self.chart_renderer.render(path, chart)
                written.append(path)

        logger.info(f"Wrote {len(written)} charts to {out_dir}")
        return written

    @staticmethod
    def _series(
        rows: list[AggregateRow],
        column: str,
        x_name: str,
        other_name: str,
        several_others: bool,
        robust_factors: list[float],
    ) -> tuple[ChartSeries, ...]:
        grouped: dict[tuple[int, float, float], list[AggregateRow]] = defaultdict(list)
        for row in rows:
            grouped[(*_series_order(row), getattr(row, other_name))].append(row)

        series = []
        for key in sorted(grouped):
            members = grouped[key]
            first = members[0]
            if first.method is Method.ROBUST:
                color = ROBUST_COLORS[robust_factors.index(first.gamma_factor) % len(ROBUST_COLORS)]
            else:
                color = METHOD_COLORS[first.method]
            label = first.series_label
            if several_others:
                label = f"{label}, {other_name}={key[2]:g}"
            points = tuple(
                (float(getattr(row, x_name)), float(getattr(row, column)))
                for row in members
                if getattr(row, column) is not None
            )
            series.append(ChartSeries(label=label, color=color, points=points))
        return tuple(series)
