"""Error codes for estimation, solving and experiment runs."""

from enum import Enum


class ErrorCode(str, Enum):
    """Error codes shared by the library and the command line.

    Each code names a failure category and carries metadata about the
    process exit code and whether a retry with other inputs can help.
    """

    # Input errors
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    INVALID_TARGET = "INVALID_TARGET"
    INVALID_PROBLEM = "INVALID_PROBLEM"
    INSUFFICIENT_SAMPLES = "INSUFFICIENT_SAMPLES"
    CONFIGURATION_ERROR = "CONFIGURATION_ERROR"
    SCHEMA_ERROR = "SCHEMA_ERROR"

    # Numerical errors
    DEGENERATE_SAMPLE = "DEGENERATE_SAMPLE"
    CONSTRUCTION_FAILED = "CONSTRUCTION_FAILED"
    METRIC_UNDEFINED = "METRIC_UNDEFINED"

    # Run errors
    SOLVER_FAILURE_RATE = "SOLVER_FAILURE_RATE"
    IO_ERROR = "IO_ERROR"
    INTERNAL_ERROR = "INTERNAL_ERROR"

    def exit_code(self) -> int:
        """Get the CLI exit code for this error.

        Returns:
            2 for configuration/input errors, 3 for solver-failure rate,
            4 for I/O failures, 1 otherwise
        """
        input_errors = {
            self.DIMENSION_MISMATCH,
            self.INVALID_TARGET,
            self.INVALID_PROBLEM,
            self.INSUFFICIENT_SAMPLES,
            self.CONFIGURATION_ERROR,
            self.SCHEMA_ERROR,
            self.DEGENERATE_SAMPLE,
        }
        if self in input_errors:
            return 2
        if self is self.SOLVER_FAILURE_RATE:
            return 3
        if self is self.IO_ERROR:
            return 4
        return 1

    def is_recoverable(self) -> bool:
        """Check if the failure is local to one replication.

        Returns:
            True if a sweep can record the failure and continue
        """
        recoverable_errors = {
            self.DEGENERATE_SAMPLE,
            self.METRIC_UNDEFINED,
        }
        return self in recoverable_errors
