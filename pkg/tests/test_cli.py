import json

import pytest
from click.testing import CliRunner

from invbench.cli import main, parse_budget
from invbench.exceptions import ConfigurationError
from invbench.harness import save_scenario
from invbench.objects import DemandModel
from tests.conftest import make_spec


def _invoke(*args):
    return CliRunner().invoke(main, ["--log-level", "ERROR", *args])


def test_parse_budget():
    assert parse_budget("5000") == (5000, None)
    assert parse_budget("30s") == (None, 30.0)
    for text in ("abc", "2.5", "-1"):
        with pytest.raises(ConfigurationError):
            parse_budget(text)


def test_run_and_eval(tmp_path):
    out = tmp_path / "run"
    result = _invoke("run", "--scenario", "const-uni", "--agent", "safety-stock", "--out", str(out))
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["mean"] == -120
    assert report["gap"] == 0.0

    result = _invoke("eval", "--traces", str(out))
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["episode_rewards"] == [-120]


@pytest.mark.parametrize("args, code", [
    (["run", "--scenario", "flat-uni", "--agent", "base-stock"], 2),
    (["run", "--scenario", "const-uni", "--agent", "aimrm-log"], 2),
    (["run", "--scenario", "const-uni", "--agent", "invagent", "--backend", "pigeon"], 2),
    (["eval", "--traces", "missing-directory"], 5),
    (["solve", "--scenario", "const-uni", "--budget", "soon"], 2),
    (["solve", "--scenario", "const-uni", "--cbc", "--budget", "5000"], 2),
])
def test_exit_codes(args, code):
    result = _invoke(*args)
    assert result.exit_code == code
    assert "错误" in result.output


def test_solve_small_scenario(tmp_path):
    spec = make_spec([1], [5], [0], DemandModel.constant(2), 3, sale_prices=[3], order_costs=[1],
                     backlog_costs=[1], holding_costs=[1], name="tiny")
    scenario_path = tmp_path / "tiny.yaml"
    save_scenario(spec, scenario_path)
    lp_path = tmp_path / "tiny.lp"
    schedule_path = tmp_path / "tiny.txt"

    result = _invoke("solve", "--scenario", str(scenario_path), "--export-ip", str(lp_path),
                     "--schedule-out", str(schedule_path))
    assert result.exit_code == 0, result.output
    solved = json.loads(result.output.strip().splitlines()[-1])
    assert (solved["objective"], solved["status"]) == (10, "optimal")
    assert lp_path.exists() and schedule_path.exists()


def test_mklog(tmp_path):
    path = tmp_path / "rl.jsonl"
    result = _invoke("mklog", "--scenario", "const-uni", "--policy", "safety-stock", "--out", str(path))
    assert result.exit_code == 0, result.output
    assert len(path.read_text(encoding="UTF-8").splitlines()) == 48
