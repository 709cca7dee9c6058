from pathlib import Path

import pytest
import yaml

from budgetbandit.cli import main
from budgetbandit.config import ConfigError, ExperimentConfig
from conftest import paper_config, point_mass_config
from conftest import DETERMINISTIC_MEANS

REPO_CONFIG = Path(__file__).resolve().parent.parent / "configs" / "binomial_k4.yaml"


def write_config(tmp_path, cfg: ExperimentConfig) -> Path:
    path = tmp_path / "config.yaml"
    cfg.save(path)
    return path


class TestSolve:
    def test_reference_instance(self, capsys):
        rc = main(["solve", "--costs", "3,4,8,10", "--budget", "5",
                   "--means", "1.5,2.5,4.5,4"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "z_star: 3" in out
        assert "optimal supports: {2,3}" in out
        assert "stability_radius: 0.1" in out

    def test_exact_mode(self, capsys):
        rc = main(["solve", "--costs", "3,4,8,10", "--budget", "5",
                   "--means", "1.5,2.5,4.5,4", "--exact"])
        assert rc == 0
        assert "z_star: 3" in capsys.readouterr().out

    def test_all_means_equal(self, capsys):
        rc = main(["solve", "--costs", "3,4,8,10", "--budget", "5",
                   "--means", "1,1,1,1"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "z_star: 1" in out
        assert "stability_radius: inf" in out

    def test_slack_rejection_instance(self, capsys):
        rc = main(["solve", "--costs", "1,3", "--budget", "2",
                   "--means", "5,1"])
        out = capsys.readouterr().out
        assert rc == 0
        assert "optimal supports: {1}" in out

    def test_infeasible_and_redundant_budgets_exit_2(self, capsys):
        assert main(["solve", "--costs", "3,4", "--budget", "1",
                     "--means", "1,1"]) == 2
        assert "below the cheapest" in capsys.readouterr().err
        assert main(["solve", "--costs", "3,4", "--budget", "9",
                     "--means", "1,1"]) == 2
        assert "redundant" in capsys.readouterr().err


class TestConfig:
    def test_round_trip(self, tmp_path):
        cfg = paper_config(replications=5, horizon=500)
        path = write_config(tmp_path, cfg)
        loaded = ExperimentConfig.load(path)
        assert loaded.to_dict() == cfg.to_dict()

    def test_committed_reference_config(self):
        cfg = ExperimentConfig.load(REPO_CONFIG)
        assert cfg.costs == [3, 4, 8, 10]
        assert cfg.budget == 5
        assert cfg.beta == 2
        assert cfg.horizon == 10_000
        assert cfg.replications == 1000
        assert [p.mean for p in cfg.populations] == [1.5, 2.5, 4.5, 4.0]

    def test_invalid_configs(self, tmp_path):
        bad = tmp_path / "bad.yaml"
        bad.write_text("costs: [3, 4]\nbudget: 5\n")
        with pytest.raises(ConfigError):
            ExperimentConfig.load(bad)
        data = yaml.safe_load(REPO_CONFIG.read_text())
        data["beta"] = 0.9
        bad.write_text(yaml.safe_dump(data))
        with pytest.raises(ConfigError):
            ExperimentConfig.load(bad)


class TestSimulate:
    def test_writes_csv_artifacts(self, tmp_path, capsys):
        cfg = paper_config(replications=3, horizon=500)
        path = write_config(tmp_path, cfg)
        out = tmp_path / "out"
        assert main(["simulate", "--config", str(path), "--out", str(out)]) == 0
        summary = (out / "summary.csv").read_text().splitlines()
        assert summary[0] == "# z_star=3"
        assert summary[1] == ("beta,n,mean_avg_outcome,sd,ci_lo,ci_hi,"
                              "mean_avg_cost,regret")
        assert summary[-1].startswith("2,500,")
        diag = (out / "diagnostics.csv").read_text().splitlines()
        assert diag[0].endswith("forced_frac_arm_4")
        assert "final regret" in capsys.readouterr().out

    def test_rerun_is_byte_identical(self, tmp_path):
        cfg = paper_config(replications=3, horizon=500)
        path = write_config(tmp_path, cfg)
        out1, out2 = tmp_path / "a", tmp_path / "b"
        main(["simulate", "--config", str(path), "--out", str(out1)])
        main(["simulate", "--config", str(path), "--out", str(out2),
              "--threads", "2"])
        for name in ("summary.csv", "diagnostics.csv"):
            assert (out1 / name).read_bytes() == (out2 / name).read_bytes()

    def test_point_mass_single_replication_zero_band(self, tmp_path):
        cfg = point_mass_config(replications=1, horizon=300,
                                means=DETERMINISTIC_MEANS)
        path = write_config(tmp_path, cfg)
        out = tmp_path / "out"
        main(["simulate", "--config", str(path), "--out", str(out)])
        for line in (out / "summary.csv").read_text().splitlines()[2:]:
            cells = line.split(",")
            assert cells[3] == "0" and cells[4] == cells[5]

    def test_missing_config_exits_2(self, tmp_path, capsys):
        rc = main(["simulate", "--config", str(tmp_path / "nope.yaml"),
                   "--out", str(tmp_path)])
        assert rc in (2, 3)


class TestSweep:
    def test_single_beta_degenerates_to_simulate(self, tmp_path):
        cfg = paper_config(replications=2, horizon=300)
        path = write_config(tmp_path, cfg)
        out = tmp_path / "out"
        assert main(["sweep", "--config", str(path), "--betas", "2",
                     "--out", str(out)]) == 0
        assert (out / "summary_b2.csv").exists()
        comparison = (out / "comparison.csv").read_text()
        assert comparison == (out / "summary_b2.csv").read_text()

    def test_multi_beta_comparison_keyed_by_beta(self, tmp_path):
        cfg = paper_config(replications=2, horizon=300)
        path = write_config(tmp_path, cfg)
        out = tmp_path / "out"
        assert main(["sweep", "--config", str(path), "--betas", "1.5,2,3",
                     "--out", str(out)]) == 0
        lines = (out / "comparison.csv").read_text().splitlines()
        betas = {line.split(",")[0] for line in lines[2:]}
        assert betas == {"1.5", "2", "3"}
        for b in ("1.5", "2", "3"):
            assert (out / f"summary_b{b}.csv").exists()

    def test_empty_beta_list_exits_2(self, tmp_path):
        cfg = paper_config(replications=2, horizon=300)
        path = write_config(tmp_path, cfg)
        assert main(["sweep", "--config", str(path), "--betas", " ",
                     "--out", str(tmp_path / "out")]) == 2
