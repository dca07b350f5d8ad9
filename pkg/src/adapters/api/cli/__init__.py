"""Command-line adapter package."""

from .commands import HANDLERS, build_experiment_config, build_parser

__all__ = ["HANDLERS", "build_parser", "build_experiment_config"]
