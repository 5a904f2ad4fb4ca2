import io
import json

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from src.zpc.cli import main
from src.zpc.cli import commands as cli_commands
from src.zpc.cli.commands import cli
from src.zpc.cli.config import RunConfig
from src.zpc.errors import ConvergenceError, DomainError
from src.zpc.zeta_zeros import load_cache, save_cache


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def zero_cache(cache_dir, zeros_500):
    return save_cache(zeros_500, cache_dir / "zeros.zpc")


def _records(cache_dir):
    path = cache_dir / "runs.jsonl"
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]


def _frame(text):
    return pd.read_csv(io.StringIO(text))


def test_conjecture2_scan_is_byte_identical(runner, zero_cache, cache_dir, tmp_path):
    args = ["scan", "--conjecture", "2", "--x", "50", "--t", "500", "--v-samples", "64"]
    first = runner.invoke(cli, args + ["--out", str(tmp_path / "a.csv")])
    second = runner.invoke(cli, args + ["--out", str(tmp_path / "b.csv")])
    assert first.exit_code == 0, first.output
    assert second.exit_code == 0, second.output
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    to_stdout = runner.invoke(cli, args)
    assert to_stdout.stdout == (tmp_path / "a.csv").read_text(encoding="utf-8")
    assert len(_records(cache_dir)) == 3


def test_metadata_record(runner, zero_cache, cache_dir):
    result = runner.invoke(cli, ["fcorr", "--x", "10", "--t", "100", "--beta", "2"])
    assert result.exit_code == 0, result.output
    (record,) = _records(cache_dir)
    assert record["command"] == "fcorr"
    assert record["params"]["beta"] == [2.0]
    assert record["rows"] == 1
    assert record["recorded"]["zeros"]["t_max"] == 500.0
    assert RunConfig.from_record(record).params == record["params"]


def test_metadata_option_overrides_location(runner, zero_cache, tmp_path):
    target = tmp_path / "elsewhere" / "runs.jsonl"
    result = runner.invoke(cli, ["--metadata", str(target), "fcorr", "--x", "10", "--t", "100"])
    assert result.exit_code == 0, result.output
    assert len(target.read_text(encoding="utf-8").splitlines()) == 1


def test_zeros_command_writes_cache_and_density(runner, cache_dir, tmp_path):
    density = tmp_path / "density.csv"
    result = runner.invoke(cli, ["zeros", "--t-max", "100", "--density-csv", str(density)])
    assert result.exit_code == 0, result.output
    assert "29 ordinates" in result.stderr
    assert load_cache(cache_dir / "zeros.zpc").n_of_t(100.0) == 29
    assert _frame(density.read_text(encoding="utf-8"))["T"].iloc[0] == 19
    assert _records(cache_dir)[0]["outputs"]["zeros"]["count"] == 29


def test_zeros_command_ingests_tables(runner, cache_dir, tmp_path):
    table = tmp_path / "zeros.txt"
    table.write_text("# precision: 1e-9\n14.134725142\n21.022039639\n", encoding="utf-8")
    result = runner.invoke(cli, ["zeros", "--ingest", str(table)])
    assert result.exit_code == 0, result.output
    assert len(load_cache(cache_dir / "zeros.zpc")) == 2


@pytest.mark.parametrize("args", [["zeros"], ["zeros", "--t-max", "100", "--ingest", __file__]])
def test_zeros_command_needs_one_source(runner, cache_dir, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_zeros_command_rejects_low_height(runner, cache_dir):
    result = runner.invoke(cli, ["zeros", "--t-max", "5"])
    assert result.exit_code == 3
    assert "t_max" in result.stderr
    assert not (cache_dir / "zeros.zpc").exists()


def test_fcorr_both_methods_with_lemma2(runner, zero_cache):
    result = runner.invoke(
        cli, ["fcorr", "--x", "5", "--t", "100", "--beta", "2", "--method", "both", "--check-lemma2"]
    )
    assert result.exit_code == 0, result.output
    frame = _frame(result.stdout)
    assert list(frame["method"]) == ["direct", "integral"]
    assert (frame["lemma2_residual"] <= 1e-6).all()
    assert abs(frame["value"].iloc[0] - frame["value"].iloc[1]) <= frame["err_estimate"].sum()


def test_domain_errors_exit_with_three(runner, zero_cache):
    result = runner.invoke(cli, ["fcorr", "--x", "10", "--t", "600"])
    assert result.exit_code == 3
    assert "exceeds" in result.output


def test_numerical_errors_exit_with_four(runner, zero_cache, monkeypatch):
    def fail(*args, **kwargs):
        raise ConvergenceError("no convergence")

    monkeypatch.setattr(cli_commands, "f_integral", fail)
    result = runner.invoke(cli, ["fcorr", "--x", "10", "--t", "100", "--method", "integral"])
    assert result.exit_code == 4


def test_missing_cache_is_a_domain_error(runner, cache_dir):
    assert runner.invoke(cli, ["fcorr", "--x", "10", "--t", "100"]).exit_code == 3


def test_psi_command(runner, cache_dir, tmp_path):
    out = tmp_path / "psi.csv"
    result = runner.invoke(
        cli, ["psi", "--x-max", "1000", "--report-von-koch", "--j-h", "10", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    frame = _frame(out.read_text(encoding="utf-8"))
    assert list(frame["x"]) == [10.0, 100.0, 1000.0]
    assert {"j", "j_ratio"} <= set(frame.columns)
    assert "von Koch" in result.stderr
    assert _records(cache_dir)[0]["recorded"]["von_koch"]["bound_holds"] is True


def test_explicit_command_modes(runner, zero_cache):
    truncated = runner.invoke(cli, ["explicit", "--x", "100.5", "--y", "300", "--y", "500", "--lower-order"])
    assert truncated.exit_code == 0, truncated.output
    assert len(_frame(truncated.stdout)) == 2

    window = runner.invoke(cli, ["explicit", "--x", "1000.5", "--w", "30"])
    assert window.exit_code == 0, window.output
    assert bool(_frame(window.stdout)["y_clipped"].iloc[0])

    blocks = runner.invoke(cli, ["explicit", "--x", "10", "--lemma1", "14", "50", "--lemma1", "50", "120"])
    assert blocks.exit_code == 0, blocks.output
    assert len(_frame(blocks.stdout)) == 2

    integer = runner.invoke(cli, ["explicit", "--x", "100", "--y", "300"])
    assert integer.exit_code == 3


def test_scan_modes(runner, zero_cache, cache_dir):
    schedule = runner.invoke(cli, ["scan", "--schedule", "--t", "10", "--t", "1e6", "--x", "1e8", "--a", "1"])
    assert schedule.exit_code == 0, schedule.output
    assert list(_records(cache_dir)[-1]["recorded"]["m_of_x"]) == ["100000000.0"]

    normalization = runner.invoke(cli, ["scan", "--normalization", "--x", "1000", "--x", "10000"])
    assert normalization.exit_code == 0, normalization.output

    theorem2 = runner.invoke(cli, ["scan", "--theorem2", "--x", "10", "--t", "300", "--beta", "2"])
    assert theorem2.exit_code == 0, theorem2.output
    assert "outer_bound" in _frame(theorem2.stdout).columns

    corollary = runner.invoke(cli, ["scan", "--corollary", "cor1", "--x", "1e4", "--t", "100", "--t", "900"])
    assert corollary.exit_code == 0, corollary.output
    assert len(_frame(corollary.stdout)) == 1

    conjecture1 = runner.invoke(cli, ["scan", "--conjecture", "1", "--x", "1e4", "--t", "200", "--beta", "2"])
    assert conjecture1.exit_code == 0, conjecture1.output


def test_scan_needs_exactly_one_mode(runner, zero_cache):
    assert runner.invoke(cli, ["scan", "--x", "10", "--t", "100"]).exit_code == 2
    assert runner.invoke(cli, ["scan", "--schedule", "--normalization", "--t", "10"]).exit_code == 2


def test_main_returns_exit_codes(zero_cache, capsys):
    assert main(["fcorr", "--x", "10", "--t", "100"]) == 0
    assert "value" in capsys.readouterr().out
    assert main(["fcorr", "--x", "10", "--t", "600"]) == 3
    assert main(["scan"]) == 2
    assert main(["--help"]) == 0


def test_run_config_rejects_unknown_commands_and_non_finite_values():
    with pytest.raises(DomainError):
        RunConfig("plot", {})
    with pytest.raises(DomainError):
        RunConfig("fcorr", {"x": [float("inf")]})
    assert list(RunConfig("fcorr", {"t": 1.0, "beta": 2.0}).params) == ["beta", "t"]


def test_run_config_rejects_nested_and_numpy_non_finite_values():
    with pytest.raises(DomainError, match="not finite"):
        RunConfig("scan", {"grid": {"x": [10.0, float("nan")]}})
    with pytest.raises(DomainError, match="not finite"):
        RunConfig("psi", {"x_max": np.float64("inf")})
    assert RunConfig("psi", {"x_max": np.float64(10.0)}).params["x_max"] == 10.0


def test_fcorr_rejects_infinite_x(runner, zero_cache):
    result = runner.invoke(cli, ["fcorr", "--x", "inf", "--t", "100"])
    assert result.exit_code == 3
    assert "not finite" in result.stderr
