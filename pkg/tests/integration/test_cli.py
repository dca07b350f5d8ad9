"""End-to-end tests of the command line through main()."""

import json

import pytest

from src.domain.models.problem import Solution, SolveStatus
from src.main import main


def simulate_args(out, *extra: str) -> list[str]:
    return [
        "simulate",
        "--profile", "desk",
        "--c", "0.5",
        "--p", "6,8",
        "--sigma", "1.0",
        "--reps", "2",
        "--gamma-factors", "0.5",
        "--seed", "7",
        "--out", str(out),
        "--no-timing",
        *extra,
    ]  # fmt: skip


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """Keep stray .env files in the repository out of the run."""
    monkeypatch.chdir(tmp_path)


@pytest.mark.integration
class TestSimulateCommand:
    """Test `shrinklp simulate`."""

    def test_writes_records_and_aggregates(self, tmp_path):
        """Test a tiny sweep exits 0 with both CSV files."""
        out = tmp_path / "results.csv"
        assert main(simulate_args(out)) == 0

        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0].startswith("c,p,m,sigma,n,method,gamma_factor,rep,seed,status")
        assert len(lines) == 1 + 12
        assert all(",Optimal," in line for line in lines[1:])
        assert (tmp_path / "results_agg.csv").exists()

    def test_config_file(self, tmp_path):
        """Test a JSON config supplies the sweep and flags override it."""
        config = tmp_path / "sweep.json"
        config.write_text(
            json.dumps({"c_values": [0.5], "p_values": [6], "sigma_list": [0.5], "reps": 1, "gamma_factors": [0.5]}),
            encoding="utf-8",
        )
        out = tmp_path / "from_file.csv"
        assert main(["simulate", "--config", str(config), "--out", str(out), "--no-timing", "--reps", "2"]) == 0
        assert len(out.read_text(encoding="utf-8").splitlines()) == 1 + 2 * 3

    def test_invalid_values(self, tmp_path):
        """Test a non-positive sigma is a configuration error."""
        assert main(simulate_args(tmp_path / "r.csv", "--sigma", "-1")) == 2
        assert not (tmp_path / "r.csv").exists()

    def test_unreadable_config(self, tmp_path):
        """Test a malformed config file exits 2."""
        config = tmp_path / "broken.json"
        config.write_text("{not json", encoding="utf-8")
        assert main(["simulate", "--config", str(config), "--out", str(tmp_path / "r.csv")]) == 2

    def test_failure_rate_exit_code(self, tmp_path, mocker):
        """Test more than 10% failed solves exits 3 but still writes the files."""
        mocker.patch(
            "src.adapters.solver.cutting_plane.CuttingPlaneSolver.solve",
            return_value=Solution(status=SolveStatus.INFEASIBLE),
        )
        out = tmp_path / "results.csv"
        assert main(simulate_args(out)) == 3
        assert out.read_text(encoding="utf-8").count(",Infeasible,") == 4


@pytest.mark.integration
class TestPlotCommand:
    """Test `shrinklp plot`."""

    def test_plots_from_sweep(self, tmp_path):
        """Test four SVG charts per sigma."""
        out = tmp_path / "results.csv"
        assert main(simulate_args(out)) == 0
        plots = tmp_path / "plots"
        assert main(["plot", "--in", str(tmp_path / "results_agg.csv"), "--out", str(plots)]) == 0
        assert sorted(path.name for path in plots.iterdir()) == [
            "rel_obj_sigma1.svg",
            "solve_time_ms_sigma1.svg",
            "viol_mag_sigma1.svg",
            "viol_ratio_sigma1.svg",
        ]

    def test_missing_input(self, tmp_path):
        """Test a missing aggregate file is an I/O failure."""
        assert main(["plot", "--in", str(tmp_path / "nope.csv"), "--out", str(tmp_path)]) == 4

    def test_bad_schema(self, tmp_path):
        """Test a file without the aggregate columns exits 2."""
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n", encoding="utf-8")
        assert main(["plot", "--in", str(bad), "--out", str(tmp_path / "plots")]) == 2


@pytest.mark.integration
class TestGenerateAndEstimateCommands:
    """Test `shrinklp generate` followed by `shrinklp estimate`."""

    def test_generate_then_estimate(self, tmp_path, capsys):
        """Test estimating from generated samples prints a JSON report."""
        scenario = tmp_path / "scenario"
        assert main(["generate", "--m", "4", "--p", "6", "--n", "5", "--sigma", "0.5", "--seed", "3", "--out", str(scenario)]) == 0
        manifest = json.loads((scenario / "manifest.json").read_text(encoding="utf-8"))
        assert manifest["master_seed"] == 3
        capsys.readouterr()

        samples = [str(scenario / f"obs_{k}.csv") for k in range(5)]
        code = main(
            ["estimate", *samples, "--clamp", "--out", str(tmp_path / "a_star.csv"), "--truth", str(scenario / "a_true.csv")]
        )
        assert code == 0

        report = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert set(report) == {"alpha", "beta", "clamped", "noise_level_hat", "loss_shrunk", "loss_mean"}
        assert 0.0 <= report["alpha"] <= 1.0
        assert (tmp_path / "a_star.csv").exists()

    def test_estimate_single_sample(self, tmp_path):
        """Test one sample file exits 2."""
        sample = tmp_path / "obs_0.csv"
        sample.write_text("1,2\n", encoding="utf-8")
        assert main(["estimate", str(sample), "--out", str(tmp_path / "out.csv")]) == 2

    def test_estimate_missing_sample(self, tmp_path):
        """Test an unreadable sample file exits 4."""
        assert main(["estimate", str(tmp_path / "a.csv"), str(tmp_path / "b.csv"), "--out", str(tmp_path / "o.csv")]) == 4

    def test_generate_invalid(self, tmp_path):
        """Test an impossible scenario exits 2."""
        assert main(["generate", "--m", "0", "--p", "3", "--out", str(tmp_path / "s")]) == 2


@pytest.mark.integration
class TestCommandLineSurface:
    """Test argument and settings handling."""

    def test_unknown_command(self):
        """Test argparse errors map to exit code 2."""
        assert main(["optimize"]) == 2

    def test_version(self, capsys):
        """Test --version exits 0."""
        assert main(["--version"]) == 0
        assert "shrinklp" in capsys.readouterr().out

    def test_unknown_log_level(self, tmp_path):
        """Test an unknown --log-level exits 2."""
        assert main(["--log-level", "chatty", "generate", "--m", "1", "--p", "1", "--out", str(tmp_path)]) == 2

    def test_invalid_settings(self, monkeypatch):
        """Test invalid SHRINKLP_* variables exit 2."""
        monkeypatch.setenv("SHRINKLP_WORKERS", "0")
        assert main(["generate", "--m", "1", "--p", "1", "--out", "x"]) == 2
