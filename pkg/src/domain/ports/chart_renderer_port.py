"""Chart rendering port interface."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class ChartSeries:
    """One polyline of a chart."""

    label: str
    color: str
    points: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class LineChart:
    """Line chart description independent of the output format."""

    title: str
    x_label: str
    y_label: str
    series: tuple[ChartSeries, ...] = field(default_factory=tuple)


class ChartRendererPort(ABC):
    """Interface for writing line charts to files."""

    @abstractmethod
    def render(self, path: Path, chart: LineChart) -> None:
        """Render a chart.

        Args:
            path: Destination file
            chart: Chart to draw
        """
        pass
