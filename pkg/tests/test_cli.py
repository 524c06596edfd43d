from __future__ import annotations

import json

import numpy as np
import pandas as pd
import pytest

from vsmsim.cli import main
from vsmsim.cli.artifacts import bode_table
from vsmsim.config import settings
from vsmsim.lti import RationalTransferFunction


def run_cli(capsys, *argv: str) -> tuple[int, dict | None]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


# ---------------------------------------------------------------------------
# simulate / cases
# ---------------------------------------------------------------------------

def test_simulate_sg_only(tmp_path, capsys):
    code, metrics = run_cli(capsys, "simulate", "--no-vsm", "--set", "duration_s=60", "-o", str(tmp_path))
    assert code == 0
    assert metrics["nadir_hz"] == pytest.approx(57.87, abs=0.3)

    series = pd.read_csv(tmp_path / "timeseries.csv")
    assert list(series.columns) == ["time_s", "freq_hz", "p_sg_pu", "p_hd_pu", "p_gov_vsm_pu",
                                    "p_rec_pu", "p_ess_pu", "soc"]
    assert len(series) == 6001

    written = json.loads((tmp_path / "metrics.json").read_text())
    assert written == metrics
    for key in ("nadir_hz", "nadir_time_s", "freq_steady_hz", "soc_min", "soc_final",
                "soc_settling_time_s", "max_power_balance_residual"):
        assert key in written


def test_simulate_row_count_follows_decimation(tmp_path, capsys):
    code, _ = run_cli(capsys, "simulate", "--set", "duration_s=20", "--set", "dt_s=0.002",
                      "--decimation", "3", "-o", str(tmp_path))
    assert code == 0
    assert len(pd.read_csv(tmp_path / "timeseries.csv")) == 10000 // 3 + 1


def test_simulate_zero_disturbance(tmp_path, capsys):
    code, _ = run_cli(capsys, "simulate", "--set", "delta_p_l_pu=0", "--set", "duration_s=20",
                      "-o", str(tmp_path))
    assert code == 0
    series = pd.read_csv(tmp_path / "timeseries.csv")
    assert (series[["p_sg_pu", "p_hd_pu", "p_gov_vsm_pu", "p_rec_pu", "p_ess_pu"]] == 0.0).all().all()
    assert (series["soc"] == 0.5).all()


@pytest.mark.slow
def test_simulate_without_recovery_drains_soc(tmp_path, capsys):
    code, metrics = run_cli(capsys, "simulate", "--no-recovery", "--set", "duration_s=300",
                            "-o", str(tmp_path))
    assert code == 0
    assert metrics["soc_final"] == pytest.approx(0.5 - 0.2757, abs=0.003)


def test_simulate_bad_config_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"h_sg_s": 2.5,\n "mystery": 1}')
    assert main(["simulate", str(bad), "-o", str(tmp_path)]) == 2
    assert main(["simulate", "--set", "h_sg_s=-1", "-o", str(tmp_path)]) == 2


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_simulate_blow_up_exit_3(tmp_path, capsys):
    code = main(["simulate", "--no-vsm", "--set", "t_sg_s=0.0001", "--set", "dt_s=0.01",
                 "--set", "duration_s=60", "-o", str(tmp_path)])
    assert code == 3


@pytest.mark.slow
def test_cases_writes_three_runs(tmp_path, capsys):
    code, summary = run_cli(capsys, "cases", "--set", "duration_s=40", "-o", str(tmp_path))
    assert code == 0
    for name in ("sg_only", "vsm_no_recovery", "vsm_recovery"):
        assert (tmp_path / name / "timeseries.csv").exists()
        assert (tmp_path / name / "metrics.json").exists()
    assert summary["sg_only"]["nadir_hz"] < summary["vsm_recovery"]["nadir_hz"]
    assert summary["analytic_soc_drop"] == pytest.approx(0.2757, abs=5e-5)


# ---------------------------------------------------------------------------
# energy / bandwidth
# ---------------------------------------------------------------------------

def test_energy_table1(capsys):
    code, report = run_cli(capsys, "energy")
    assert code == 0
    assert report["closed_form"]["delta_e_vsm_pu_s"] == pytest.approx(1.875)
    assert report["closed_form"]["delta_soc"] == pytest.approx(0.2757, abs=5e-5)
    assert report["agreement"] is True
    assert set(report["final_value"]) == {"delta_e_hd_pu_s", "delta_e_gov_pu_s",
                                          "delta_e_vsm_pu_s", "delta_soc"}


def test_energy_zero_for_inertia_only(capsys):
    code, report = run_cli(capsys, "energy", "--set", "d_vsm_pu=0", "--set", "kp_vsm_pu=0")
    assert code == 0
    assert all(v == 0.0 for v in report["closed_form"].values())


def test_energy_doubles_with_disturbance(capsys):
    _, single = run_cli(capsys, "energy")
    _, double = run_cli(capsys, "energy", "--set", "delta_p_l_pu=0.75")
    for key, value in single["closed_form"].items():
        assert double["closed_form"][key] == pytest.approx(2 * value)


def test_energy_without_secondary_exit_4(capsys, caplog):
    assert main(["energy", "--set", "ki_sg_pu_per_s=0"]) == 4
    assert "ki_sg" in caplog.text


def test_bandwidth_table1(capsys):
    code, report = run_cli(capsys, "bandwidth", "--separation-factor", "2", "--third-control-bw", "0.01")
    assert code == 0
    assert report["primary_analytic"] == pytest.approx(5.3333, rel=1e-4)
    assert report["secondary_analytic"] == pytest.approx(0.125)
    assert report["soc_analytic"] == pytest.approx(0.0588, rel=1e-3)
    assert report["separation_ok"] is True
    assert report["soc_above_third"] is True


def test_bandwidth_schema_is_stable(capsys):
    _, plain = run_cli(capsys, "bandwidth")
    _, with_third = run_cli(capsys, "bandwidth", "--third-control-bw", "0.01")
    assert set(plain) == set(with_third)


def test_bandwidth_fast_recovery_breaks_separation(capsys):
    code, report = run_cli(capsys, "bandwidth", "--set", "kp_e_pu=3.0")
    assert code == 0
    assert report["separation_ok"] is False


def test_bandwidth_exit_codes(capsys):
    assert main(["bandwidth", "--set", "kp_e_pu=0"]) == 5
    assert main(["bandwidth", "--separation-factor", "0.5"]) == 2


# ---------------------------------------------------------------------------
# bode
# ---------------------------------------------------------------------------

def test_bode_soc_brackets_corner(tmp_path, capsys):
    code = main(["bode", "--which", "soc", "--omega-range", "1e-3:1", "--points", "301", "-o", str(tmp_path)])
    assert code == 0
    table = pd.read_csv(tmp_path / "bode.csv")
    assert list(table.columns) == ["omega_rad_s", "magnitude_db", "phase_deg"]
    below = np.flatnonzero(table["magnitude_db"].to_numpy() < 20 * np.log10(1 / np.sqrt(2)))
    first = below[0]
    assert table["omega_rad_s"][first - 1] < 0.4 / 6.8 < table["omega_rad_s"][first]


def test_bode_gf_low_frequency_slope(tmp_path, capsys):
    assert main(["bode", "--which", "gf", "--omega-range", "1e-5:1e-4", "--points", "2", "-o", str(tmp_path)]) == 0
    table = pd.read_csv(tmp_path / "bode.csv")
    assert len(table) == 2
    slope = table["magnitude_db"][1] - table["magnitude_db"][0]
    assert slope == pytest.approx(20.0, abs=0.01)


def test_bode_bad_range_exit_2(tmp_path, capsys):
    assert main(["bode", "--omega-range", "1:0.1", "-o", str(tmp_path)]) == 2
    assert main(["bode", "--omega-range", "abc", "-o", str(tmp_path)]) == 2
    assert main(["bode", "--points", "1", "-o", str(tmp_path)]) == 2


def test_bode_pole_rows_are_blank():
    integrator = RationalTransferFunction((1.0,), (0.0, 1.0))
    table = bode_table(integrator, 1e-20, 1.0, 3)
    assert np.isnan(table["magnitude_db"][0])
    assert table["magnitude_db"][2] == pytest.approx(0.0)


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def test_sweep_unknown_param_exit_2(tmp_path, capsys):
    assert main(["sweep", "--param", "kp_x", "--values", "1,2", "-o", str(tmp_path)]) == 2
    assert main(["sweep", "--param", "vsm_enabled", "--values", "1", "-o", str(tmp_path)]) == 2


def test_sweep_rejects_repeated_values(tmp_path, capsys):
    # 0.4 and 0.40 would share one run directory
    assert main(["sweep", "--param", "kp_e_pu", "--values", "0.4,0.40", "-o", str(tmp_path)]) == 2
    assert not any(tmp_path.iterdir())


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_parallel_sweep_blow_up_exit_3(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(settings.simulator, "sweep_workers", 2)
    code = main(["sweep", "--set", "vsm_enabled=false", "--set", "dt_s=0.01", "--set", "duration_s=20",
                 "--param", "t_sg_s", "--values", "0.0001,0.3", "-o", str(tmp_path)])
    assert code == 3


def test_single_value_sweep_matches_simulate(tmp_path, capsys):
    base = ["--set", "duration_s=30", "--set", "dt_s=0.002"]
    code, sweep = run_cli(capsys, "sweep", *base, "--param", "kp_e_pu", "--values", "0.4",
                          "-o", str(tmp_path / "sweep"))
    assert code == 0
    code, metrics = run_cli(capsys, "simulate", *base, "-o", str(tmp_path / "single"))
    assert code == 0
    swept = json.loads((tmp_path / "sweep" / "00_kp_e_pu=0.4" / "metrics.json").read_text())
    assert swept == metrics
    assert sweep["runs"][0]["nadir_degradation_hz"] == 0.0
    summary = pd.read_csv(tmp_path / "sweep" / "sweep_summary.csv")
    assert list(summary.columns) == ["value", "nadir_hz", "soc_settling_time_s",
                                     "nadir_degradation_hz", "separation_ok"]


@pytest.mark.slow
def test_sweep_recovery_gain_speeds_settling(tmp_path, capsys):
    code, sweep = run_cli(capsys, "sweep", "--set", "duration_s=1200", "--set", "dt_s=0.005",
                          "--param", "kp_e_pu", "--values", "0.1,0.4,1.6", "-o", str(tmp_path))
    assert code == 0
    settling = [row["soc_settling_time_s"] for row in sweep["runs"]]
    assert None not in settling
    assert settling[0] > settling[1] > settling[2]
    assert [row["separation_ok"] for row in sweep["runs"]] == [True, True, False]
    assert sorted(p.name for p in tmp_path.iterdir() if p.is_dir()) == [
        "00_kp_e_pu=0.1", "01_kp_e_pu=0.4", "02_kp_e_pu=1.6"]


@pytest.mark.slow
def test_sweep_flags_nadir_degradation(tmp_path, capsys):
    code, sweep = run_cli(capsys, "sweep", "--set", "duration_s=60", "--set", "dt_s=0.002",
                          "--param", "kp_e_pu", "--values", "10", "-o", str(tmp_path))
    assert code == 0
    (row,) = sweep["runs"]
    assert sweep["baseline_value"] == 0.4
    assert row["separation_ok"] is False
    assert row["nadir_degradation_hz"] > 0.0
