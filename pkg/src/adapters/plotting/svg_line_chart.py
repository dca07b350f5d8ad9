"""Line charts written directly as SVG markup."""

import html
import logging
from pathlib import Path

from ...domain.models.exceptions import SweepIOError
from ...domain.ports.chart_renderer_port import ChartRendererPort, LineChart

logger = logging.getLogger(__name__)

WIDTH = 1024
HEIGHT = 640
MARGIN_LEFT = 90
MARGIN_RIGHT = 260
MARGIN_TOP = 70
MARGIN_BOTTOM = 100
Y_TICKS = 6


def _format_tick(value: float) -> str:
    if abs(value) >= 100:
        return f"{value:.0f}"
    if abs(value) >= 10:
        return f"{value:.1f}"
    if abs(value) >= 0.01 or value == 0.0:
        return f"{value:.2f}"
    return f"{value:.1e}"


def _text(x: float, y: float, content: str, size: int, anchor: str = "middle", extra: str = "") -> str:
    return (
        f'<text x="{x:.2f}" y="{y:.2f}" text-anchor="{anchor}" font-size="{size}" '
        f'font-family="Arial"{extra}>{html.escape(content)}</text>'
    )


class SvgLineChartRenderer(ChartRendererPort):
    """Renders a LineChart with linear axes, grid, markers and a legend.

    The y range always includes zero and extends below it for negative
    values (relative objectives are signed).
    """

    def render(self, path: Path, chart: LineChart) -> None:
        markup = self.to_svg(chart)
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(markup, encoding="utf-8")
        except OSError as e:
            raise SweepIOError(f"Cannot write {path}: {e}") from e
        logger.debug(f"Wrote chart '{chart.title}' to {path}")

    def to_svg(self, chart: LineChart) -> str:
        xs = [x for series in chart.series for x, _ in series.points]
        ys = [y for series in chart.series for _, y in series.points]
        if not xs:
            logger.warning(f"Chart '{chart.title}' has no points; drawing empty axes")
            xs, ys = [0.0, 1.0], [0.0]

        x_min, x_max = min(xs), max(xs)
        if x_max <= x_min:
            x_min -= 1.0
            x_max += 1.0
        y_min, y_max = min(0.0, min(ys)), max(0.0, max(ys))
        if y_max <= y_min:
            y_max = y_min + 1.0
        pad = 0.1 * (y_max - y_min)
        y_max += pad
        if y_min < 0.0:
            y_min -= pad

        left, right = MARGIN_LEFT, WIDTH - MARGIN_RIGHT
        top, bottom = MARGIN_TOP, HEIGHT - MARGIN_BOTTOM

        def x_px(x: float) -> float:
            return left + (x - x_min) / (x_max - x_min) * (right - left)

        def y_px(y: float) -> float:
            return bottom - (y - y_min) / (y_max - y_min) * (bottom - top)

        lines = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}">',
            '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
            _text(WIDTH / 2, 36, chart.title, 24),
        ]

        for i in range(Y_TICKS + 1):
            value = y_min + (y_max - y_min) * i / Y_TICKS
            y = y_px(value)
            lines.append(
                f'<line x1="{left}" y1="{y:.2f}" x2="{right}" y2="{y:.2f}" stroke="#d9d9d9" stroke-width="1"/>'
            )
            lines.append(_text(left - 10, y + 5, _format_tick(value), 13, anchor="end"))

        if y_min < 0.0:
            zero = y_px(0.0)
            lines.append(
                f'<line x1="{left}" y1="{zero:.2f}" x2="{right}" y2="{zero:.2f}" '
                f'stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>'
            )

        lines.append(f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="#000000" stroke-width="2"/>')
        lines.append(f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="#000000" stroke-width="2"/>')

        for value in sorted(set(xs)):
            x = x_px(value)
            lines.append(
                f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 6}" stroke="#000000" stroke-width="1"/>'
            )
            lines.append(_text(x, bottom + 28, f"{value:g}", 13))

        for index, series in enumerate(chart.series):
            points = sorted(series.points)
            lines.append(f"<g class=\"series\" data-label=\"{html.escape(series.label)}\">")
            if points:
                coordinates = " ".join(f"{x_px(x):.2f},{y_px(y):.2f}" for x, y in points)
                lines.append(
                    f'<polyline fill="none" stroke="{series.color}" stroke-width="3" points="{coordinates}"/>'
                )
                for x, y in points:
                    lines.append(f'<circle cx="{x_px(x):.2f}" cy="{y_px(y):.2f}" r="4" fill="{series.color}"/>')
            lines.append("</g>")

            legend_x, legend_y = right + 22, top + 22 + index * 28
            lines.append(
                f'<line x1="{legend_x}" y1="{legend_y}" x2="{legend_x + 26}" y2="{legend_y}" '
                f'stroke="{series.color}" stroke-width="3"/>'
            )
            lines.append(_text(legend_x + 34, legend_y + 5, series.label, 14, anchor="start"))

        middle = (top + bottom) / 2
        lines.append(_text((left + right) / 2, HEIGHT - 25, chart.x_label, 16))
        lines.append(_text(28, middle, chart.y_label, 16, extra=f' transform="rotate(-90 28 {middle:.1f})"'))
        lines.append("</svg>")
        return "\n".join(lines) + "\n"
