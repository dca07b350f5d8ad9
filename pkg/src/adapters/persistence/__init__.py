"""Persistence adapters package.

This package contains CSV and JSON implementations of the storage ports.
"""

from .matrix_csv import CsvMatrixStore
from .record_csv_repository import CsvRecordStore
from .scenario_bundle import ScenarioBundleWriter

__all__ = ["CsvMatrixStore", "CsvRecordStore", "ScenarioBundleWriter"]
