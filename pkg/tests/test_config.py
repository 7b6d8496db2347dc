import json
import logging

from quintic_radicals.config import ConfigurationManager
from quintic_radicals.engine import SolverEngine


def test_defaults():
    config = ConfigurationManager()
    assert config.get("solver.tol") == 1e-12
    assert config.get("solver.max_iter") == 25
    assert config.get("solver.method") == "both"
    assert config.get("batch.jobs") == 0
    assert config.get("missing.key", "fallback") == "fallback"


def test_defaults_are_not_shared():
    first = ConfigurationManager()
    first.set("solver.tol", 1e-6)
    assert ConfigurationManager().get("solver.tol") == 1e-12


def test_config_file_overrides_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"solver": {"max_iter": 40, "tol": None}}))
    config = ConfigurationManager(str(path))
    assert config.get("solver.max_iter") == 40
    assert config.get("solver.tol") == 1e-12
    assert config.get("solver.trig_tol") == 1e-10


def test_unreadable_config_file_keeps_defaults(tmp_path, caplog):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with caplog.at_level(logging.WARNING):
        config = ConfigurationManager(str(path))
    assert config.get("solver.max_iter") == 25
    assert "Could not load config file" in caplog.text


def test_environment_overrides():
    config = ConfigurationManager()
    config.apply_environment(
        {"QUINTIC_TOL": "1e-10", "QUINTIC_MAX_ITER": "40", "QUINTIC_JOBS": "3"}
    )
    assert config.get("solver.tol") == 1e-10
    assert config.get("solver.max_iter") == 40
    assert config.get("batch.jobs") == 3


def test_malformed_environment_is_ignored(caplog):
    config = ConfigurationManager()
    with caplog.at_level(logging.WARNING):
        config.apply_environment({"QUINTIC_MAX_ITER": "many", "QUINTIC_TOL": ""})
    assert config.get("solver.max_iter") == 25
    assert config.get("solver.tol") == 1e-12
    assert "QUINTIC_MAX_ITER" in caplog.text


def test_precedence(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"solver": {"tol": 1e-8, "max_iter": 30}}))
    environ = {"QUINTIC_TOL": "1e-10"}

    from_file = SolverEngine(config_file=str(path), environ={})
    assert from_file.config.get("solver.tol") == 1e-8

    from_env = SolverEngine(config_file=str(path), environ=environ)
    assert from_env.config.get("solver.tol") == 1e-10
    assert from_env.config.get("solver.max_iter") == 30

    from_flags = SolverEngine(
        config={"solver": {"tol": 1e-9, "max_iter": None}},
        config_file=str(path),
        environ=environ,
    )
    assert from_flags.config.get("solver.tol") == 1e-9
    assert from_flags.config.get("solver.max_iter") == 30


def test_save_and_reload(tmp_path):
    config = ConfigurationManager()
    config.set("verify.oracle", True)
    path = tmp_path / "saved.json"
    assert config.save_config(str(path))
    assert ConfigurationManager(str(path)).get("verify.oracle") is True


def test_dump_config_json(capsys):
    ConfigurationManager().dump_config_json()
    assert json.loads(capsys.readouterr().out)["solver"]["tol"] == 1e-12
