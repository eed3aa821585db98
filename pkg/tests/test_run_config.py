"""Tests for RunConfig layering: YAML run section, GFC_EPSILON, CLI overrides."""
import json

import pytest

from src.errors import InvalidRunConfig
from src.utils.config import EPSILON_ENV, RunConfig, cfg_get, load_config, load_run_config
from src.utils.snapshot import save_run_snapshot


def test_defaults():
    run = RunConfig()
    assert run.epsilon == 1e-9
    assert run.order_cap == 40320
    assert run.lift_cap == 10**6
    assert run.output == "text"


def test_yaml_then_env_then_overrides():
    cfg = {"run": {"epsilon": 1e-8, "lift_cap": 500, "workers": 2}}
    run = RunConfig.from_config(cfg, env={})
    assert (run.epsilon, run.lift_cap, run.workers) == (1e-8, 500, 2)

    run = RunConfig.from_config(cfg, env={EPSILON_ENV: "1e-10"})
    assert run.epsilon == 1e-10

    run = RunConfig.from_config(cfg, overrides={"epsilon": 1e-7, "lift_cap": None},
                                env={EPSILON_ENV: "1e-10"})
    assert run.epsilon == 1e-7
    assert run.lift_cap == 500


def test_order_cap_is_clipped():
    assert RunConfig(order_cap=10**9).order_cap == 40320


@pytest.mark.parametrize(
    "kwargs",
    [{"epsilon": 0.0}, {"epsilon": 0.01}, {"lift_cap": 0}, {"output": "xml"}, {"workers": 0}],
)
def test_invalid_values(kwargs):
    with pytest.raises(InvalidRunConfig):
        RunConfig(**kwargs)


def test_bad_env_value():
    with pytest.raises(InvalidRunConfig):
        RunConfig.from_config({}, env={EPSILON_ENV: "tiny"})


def test_load_config(tmp_path):
    assert load_config(tmp_path / "missing.yaml") == {}
    path = tmp_path / "config.yaml"
    path.write_text("run:\n  seed: 5\n  output: json\n", encoding="utf-8")
    cfg = load_config(path)
    assert cfg_get(cfg, "run.seed") == 5
    assert cfg_get(cfg, "run.missing", "x") == "x"

    bad = tmp_path / "bad.yaml"
    bad.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(InvalidRunConfig):
        load_config(bad)


def test_load_run_config_reads_dotenv(tmp_path, monkeypatch):
    # setenv then delenv so teardown removes whatever the .env file sets
    monkeypatch.setenv(EPSILON_ENV, "1e-9")
    monkeypatch.delenv(EPSILON_ENV)
    env_file = tmp_path / ".env"
    env_file.write_text(f"{EPSILON_ENV}=1e-11\n", encoding="utf-8")
    config = tmp_path / "config.yaml"
    config.write_text("run:\n  epsilon: 1.0e-8\n", encoding="utf-8")
    run = load_run_config(config, {"seed": 3}, dotenv_path=env_file)
    assert run.epsilon == 1e-11
    assert run.seed == 3


def test_snapshot_records_run_config(tmp_path):
    path = save_run_snapshot(RunConfig(seed=4), tmp_path / "snap", "classify", ["classify", "--seed", "4"])
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["command"] == "classify"
    assert data["run_config"]["seed"] == 4
    assert data["argv"] == ["classify", "--seed", "4"]
    assert set(data["versions"]) >= {"python", "numpy", "scipy"}
    assert isinstance(data["git_commit"], str)
