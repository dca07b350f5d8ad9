"""shrinklp: linear shrinkage for noisy linear programs."""

__version__ = "0.1.0"
