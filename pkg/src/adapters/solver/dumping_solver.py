"""Solver decorator that dumps every solved problem for offline debugging."""

import hashlib
import json
import logging
from pathlib import Path

from ...domain.models.exceptions import SweepIOError
from ...domain.models.problem import ConstrainedProblem, Solution
from ...domain.ports.lp_solver_port import LPSolverPort
from ...domain.ports.matrix_store_port import MatrixStorePort

logger = logging.getLogger(__name__)


def problem_fingerprint(problem: ConstrainedProblem) -> str:
    """Short content hash naming a problem's dump directory."""
    digest = hashlib.blake2b(digest_size=8)
    digest.update(problem.a.values.tobytes())
    digest.update(problem.b.tobytes())
    digest.update(problem.cost.tobytes())
    digest.update(repr(problem.robust_radius).encode("ascii"))
    return digest.hexdigest()


class DumpingSolver(LPSolverPort):
    """Wraps another solver and writes A, b, cost and the solution to disk.

    Each problem lands in ``<dump_dir>/<fingerprint>/``, so identical
    problems from different replications share one directory.
    """

    def __init__(self, inner: LPSolverPort, dump_dir: Path, matrix_store: MatrixStorePort):
        self.inner = inner
        self.dump_dir = Path(dump_dir)
        self.matrix_store = matrix_store

    def solve(self, problem: ConstrainedProblem) -> Solution:
        solution = self.inner.solve(problem)
        target = self.dump_dir / problem_fingerprint(problem)
        try:
            self._dump(target, problem, solution)
        except (OSError, SweepIOError) as e:
            logger.warning(f"Debug dump to {target} failed: {e}")
        return solution

    def _dump(self, target: Path, problem: ConstrainedProblem, solution: Solution) -> None:
        target.mkdir(parents=True, exist_ok=True)
        self.matrix_store.write_matrix(target / "a.csv", problem.a)
        self.matrix_store.write_vector(target / "b.csv", problem.b)
        self.matrix_store.write_vector(target / "cost.csv", problem.cost)
        payload = {
            "robust_radius": problem.robust_radius,
            "status": solution.status.value,
            "objective": solution.objective,
            "x": None if solution.x is None else solution.x.tolist(),
            "iterations": solution.iterations,
            "cutting_planes_added": solution.cutting_planes_added,
            "max_violation": solution.max_violation,
        }
        (target / "solution.json").write_text(json.dumps(payload, indent=2), encoding="utf-8")
        logger.debug(f"Dumped {solution.status.value} problem to {target}")
