#!/usr/bin/env python
# -*- coding: utf-8 -*-

import pytest

from core.errors import ValidationError
from core.managers import ConfigManager, parse_config_text
from core.models import Sampling, Scenario, ScenarioConfig
from core.scenarios import EnsembleAverageScenario

CONFIG_TEXT = """
# ensemble run
scenario = ensemble_average
n-env = 50
lambda = 0.3
seed = 7   # fixed
out = "out/ensemble.csv"
"""


class TestParseConfigText:
    def test_keys_and_values(self):
        data = parse_config_text(CONFIG_TEXT)
        assert data == {
            "scenario": "ensemble_average",
            "n_env": 50,
            "lam": 0.3,
            "seed": 7,
            "out_path": "out/ensemble.csv",
        }

    def test_booleans(self):
        assert parse_config_text("flag = yes\nother = False") == {"flag": True, "other": False}

    def test_string_fields_stay_text(self):
        data = parse_config_text("out = 2024\nlog_level = info\nseed = 2024")
        assert data == {"out_path": "2024", "log_level": "info", "seed": 2024}

    def test_missing_equals(self):
        with pytest.raises(ValidationError):
            parse_config_text("scenario ensemble_average")


class TestConfigManager:
    def test_priority(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text(CONFIG_TEXT, encoding="utf-8")
        environ = {"DECOHERENCE_LAB_SEED": "11", "DECOHERENCE_LAB_N_ENV": "60", "HOME": "/tmp"}
        manager = ConfigManager(config_file=str(path), overrides={"n_env": 70, "runs": None}, environ=environ)
        assert manager.get("n_env") == 70
        assert manager.get("seed") == 11
        assert manager.get("lambda") == 0.3
        assert manager.get("runs", 3) == 3
        assert "home" not in manager.get_all()

    def test_unknown_environment_keys_ignored(self):
        environ = {"DECOHERENCE_LAB_HOME": "/opt/lab", "DECOHERENCE_LAB_SEED": "3"}
        manager = ConfigManager(overrides={"scenario": "bell_table"}, environ=environ)
        assert "home" not in manager.get_all()
        config = manager.build_config()
        assert config.seed == 3

    def test_numeric_output_path(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("scenario = bell_table\nout = 2024\n", encoding="utf-8")
        config = ConfigManager(config_file=str(path), environ={"DECOHERENCE_LAB_OUT": "7"}).build_config()
        assert config.output_path() == "7"
        assert ConfigManager(config_file=str(path), environ={}).build_config().output_path() == "2024"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValidationError):
            ConfigManager(config_file=str(tmp_path / "nope.cfg"), environ={})

    def test_build_config(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text(CONFIG_TEXT, encoding="utf-8")
        config = ConfigManager(config_file=str(path), environ={}).build_config()
        assert config.scenario is Scenario.ENSEMBLE_AVERAGE
        assert config.n_env == 50
        assert config.output_path() == "out/ensemble.csv"

    def test_scenario_required(self):
        with pytest.raises(ValidationError):
            ConfigManager(overrides={"seed": 1}, environ={}).build_config()

    def test_set_and_reload(self):
        manager = ConfigManager(overrides={"scenario": "bell_table"}, environ={})
        manager.set("steps", 4)
        assert manager.get("steps") == 4
        manager.reload()
        assert manager.get("steps") is None


class TestScenarioConfig:
    @pytest.mark.parametrize(
        "data",
        [
            {"scenario": "nope"},
            {"scenario": "bell_table", "steps": 0},
            {"scenario": "bell_table", "seed": -1},
            {"scenario": "bell_table", "seed": 2 ** 64},
            {"scenario": "bell_table", "t_max": 0.0},
            {"scenario": "bell_table", "lam": -0.2},
            {"scenario": "bell_table", "sampling": "gaussian"},
            {"scenario": "bell_table", "unknown_key": 1},
            {"scenario": "bell_table", "log_level": "LOUD"},
            {"scenario": "ensemble_sweep", "n_step": 0},
            {"scenario": "gaussian_bath", "spreads": 0},
        ],
    )
    def test_invalid(self, data):
        with pytest.raises(ValidationError):
            ScenarioConfig.from_mapping(data)

    def test_resolved_fills_only_missing(self):
        config = ScenarioConfig.from_mapping({"scenario": "ensemble_average", "n_env": 30})
        resolved = EnsembleAverageScenario().resolve(config)
        assert resolved.n_env == 30
        assert resolved.runs == 10
        assert resolved.sampling is Sampling.BALANCED
        assert resolved.output_path() == "ensemble_average.csv"

    def test_echo_is_json_friendly(self):
        echo = ScenarioConfig.from_mapping({"scenario": "dfs_demo"}).echo()
        assert echo["scenario"] == "dfs_demo"
        assert echo["seed"] == 42
        assert echo["engine"] == "closed_form"
