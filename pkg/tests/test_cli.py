import json

import pytest

from vatom.cli import main


def test_simulate_writes_trajectory(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    code = main(["simulate", "--basis", "dressed", "--t-end", "10",
                 "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[1].split(",")[0] == "t"
    assert "trace drift" in capsys.readouterr().out


def test_simulate_bare_zero_field(tmp_path):
    out = tmp_path / "decay.csv"
    code = main(["simulate", "--basis", "bare", "--omega", "0",
                 "--g-probe", "0", "--lambda-pump", "0", "--t-end", "5",
                 "--out", str(out)])
    assert code == 0
    last = out.read_text().splitlines()[-1].split(",")
    # ground state stays put
    assert float(last[7]) == pytest.approx(1.0, abs=1e-9)


def test_invalid_parameter_exits_2(tmp_path, capsys):
    code = main(["simulate", "--gamma-b", "-2", "--out", str(tmp_path / "x.csv")])
    assert code == 2
    assert "gamma_b" in capsys.readouterr().err


def test_bad_config_file_exits_2(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("nonsense = 1\n")
    code = main(["steady", "--config", str(cfg)])
    assert code == 2
    assert "unknown key" in capsys.readouterr().err


def test_compare_targets(tmp_path, capsys):
    for target in ("fig3", "fig5"):
        out = tmp_path / f"{target}.csv"
        assert main(["compare", "--target", target, "--out", str(out)]) == 0
        assert out.exists()
    assert "improved is better" in capsys.readouterr().out


def test_compare_fig4_frequencies(tmp_path, capsys):
    out = tmp_path / "fig4.csv"
    assert main(["compare", "--target", "fig4", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "dominant |omega| of rho_beta_gamma" in text
    assert "steady |rho_beta_gamma| / |rho_alpha_beta|" in text


def test_steady_prints_regime_table(capsys):
    assert main(["steady"]) == 0
    out = capsys.readouterr().out
    assert "beta->alpha" in out
    assert "GAIN_WITH_INVERSION" in out
    assert "rho_alpha_alpha = 0.273" in out


def test_sweep_writes_map(tmp_path):
    out = tmp_path / "map.csv"
    code = main(["sweep", "--axis1", "lambda_pump=0:2:3",
                 "--axis2", "gamma_b=0.5:2:2", "--source", "analytic",
                 "--out", str(out)])
    assert code == 0
    assert out.read_text().splitlines()[1].startswith("lambda_pump,gamma_b")


def test_conditions_json(capsys):
    assert main(["conditions", "--gamma-b", "0.75", "--lambda-pump", "0.6"]) == 0
    out = capsys.readouterr().out
    payload = json.loads(out[out.index("{"):])
    names = {c["name"]: c for c in payload["conditions"]}
    assert names["dressed_gain_strong_field"]["satisfied"] is True


def test_fixed_step_output_is_deterministic(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    argv = ["simulate", "--t-end", "2", "--samples", "21", "--fixed-step", "0.001"]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_out_dir_env_default(tmp_path, monkeypatch):
    monkeypatch.setenv("VATOM_OUT_DIR", str(tmp_path))
    assert main(["simulate", "--t-end", "1", "--samples", "11"]) == 0
    assert (tmp_path / "trajectory_dressed.csv").exists()
