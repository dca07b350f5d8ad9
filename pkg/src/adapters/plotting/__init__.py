"""Chart rendering adapters package."""

from .svg_line_chart import SvgLineChartRenderer

__all__ = ["SvgLineChartRenderer"]
