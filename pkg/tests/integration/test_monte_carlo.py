"""Monte-Carlo behaviour of the compared methods at reduced scale."""

from statistics import mean

import pytest

from src.adapters.solver.cutting_plane import CuttingPlaneSolver
from src.adapters.solver.revised_simplex import RevisedSimplexSolver
from src.application.use_cases.run_replication import RunReplicationUseCase
from src.domain.models.experiment import ExperimentConfig, Method, RecordStatus, SweepCell

P = 40
REPS = 6


@pytest.fixture(scope="module")
def records_by_sigma():
    """Records of a c = 0.5, p = 40 grid at two noise levels."""
    config = ExperimentConfig(
        c_values=[0.5],
        p_values=[P],
        sigma_list=[0.5, 2.0],
        gamma_factors=[0.2, 0.8],
        reps=REPS,
        master_seed=11,
        record_timing=False,
    )
    use_case = RunReplicationUseCase(RevisedSimplexSolver(), CuttingPlaneSolver())
    return {
        sigma: [
            record
            for rep in range(REPS)
            for record in use_case.execute(SweepCell(0.5, P, sigma), rep, config)
        ]
        for sigma in config.sigma_list
    }


def _values(records, column, method, gamma_factor=None):
    return [
        getattr(record, column)
        for record in records
        if record.method is method and record.gamma_factor == gamma_factor and record.status is RecordStatus.OPTIMAL
    ]


@pytest.mark.slow
@pytest.mark.integration
class TestMonteCarloTrends:
    """Test qualitative trends that hold replication by replication."""

    def test_all_solves_succeed(self, records_by_sigma):
        """Test every method solves every replication."""
        for records in records_by_sigma.values():
            assert len(records) == REPS * 4
            assert {record.status for record in records} == {RecordStatus.OPTIMAL}

    def test_more_noise_shrinks_harder(self, records_by_sigma):
        """Test alpha falls as the noise level grows."""
        low = mean(_values(records_by_sigma[0.5], "alpha_hat", Method.SHRINKAGE))
        high = mean(_values(records_by_sigma[2.0], "alpha_hat", Method.SHRINKAGE))
        assert low > high + 0.2

    def test_larger_radius_costs_objective(self, records_by_sigma):
        """Test the robust objective falls with the radius in every replication."""
        for records in records_by_sigma.values():
            small = _values(records, "rel_obj", Method.ROBUST, 0.2)
            large = _values(records, "rel_obj", Method.ROBUST, 0.8)
            assert all(b <= a + 1e-4 for a, b in zip(small, large, strict=True))

    def test_nominal_violates_true_rows(self, records_by_sigma):
        """Test the plug-in solution breaks a sizeable share of the true rows."""
        assert mean(_values(records_by_sigma[2.0], "viol_ratio", Method.NOMINAL)) > 0.2

    def test_robust_protects_against_violation(self, records_by_sigma):
        """Test a wide ball violates fewer true rows than the plug-in solution."""
        for records in records_by_sigma.values():
            nominal = mean(_values(records, "viol_ratio", Method.NOMINAL))
            robust = mean(_values(records, "viol_ratio", Method.ROBUST, 0.8))
            assert robust < nominal
