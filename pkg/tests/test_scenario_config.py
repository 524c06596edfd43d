from __future__ import annotations

import json

import pytest

from vsmsim.cli.scenario_config import ScenarioConfig, dump_config, load_config, parse_override
from vsmsim.errors import ConfigError
from vsmsim.model.profiles import REFERENCE_ESS, REFERENCE_SG, REFERENCE_VSM


def write(tmp_path, text: str):
    path = tmp_path / "case.json"
    path.write_text(text)
    return path


def test_builtin_profile_is_table1():
    config = load_config("table1")
    assert config.sg_params() == REFERENCE_SG
    assert config.vsm_params() == REFERENCE_VSM
    assert config.ess_params() == REFERENCE_ESS
    scenario = config.to_scenario()
    assert scenario.delta_p_l == 0.375
    assert scenario.step_time == 10.0
    assert scenario.duration == 400.0


def test_round_trip_is_exact(tmp_path):
    config = load_config("table1")
    path = dump_config(config, tmp_path / "table1.json")
    assert load_config(path) == config


def test_missing_keys_fall_back_to_profile(tmp_path):
    config = load_config(write(tmp_path, '{"kp_e_pu": 1.6}'))
    assert config.kp_e_pu == 1.6
    assert config.h_sg_s == REFERENCE_SG.h_sg


def test_unknown_key_rejected(tmp_path):
    with pytest.raises(ConfigError) as info:
        load_config(write(tmp_path, '{\n  "h_sg_s": 2.5,\n  "inertia": 3\n}'))
    assert info.value.key == "inertia"
    assert info.value.line == 3
    assert info.value.exit_code == 2


def test_malformed_json_reports_line(tmp_path):
    with pytest.raises(ConfigError) as info:
        load_config(write(tmp_path, '{\n  "h_sg_s": 2.5,\n  "d_sg_pu": ,\n}'))
    assert info.value.line == 3


def test_nested_values_rejected(tmp_path):
    with pytest.raises(ConfigError) as info:
        load_config(write(tmp_path, json.dumps({"sg": {"h": 2.5}})))
    assert info.value.key == "sg"


def test_invalid_physical_value_names_config_key(tmp_path):
    config = load_config(write(tmp_path, '{"h_sg_s": -1.0}'))
    with pytest.raises(ConfigError) as info:
        config.to_scenario()
    assert info.value.key == "h_sg_s"


def test_missing_file():
    with pytest.raises(ConfigError, match="cannot read"):
        load_config("/nonexistent/case.json")


def test_overrides():
    config = load_config("table1", ["kp_e_pu=3.0", "recovery_enabled=false"])
    assert config.kp_e_pu == 3.0
    assert config.recovery_enabled is False
    assert parse_override("duration_s=60") == ("duration_s", 60)
    with pytest.raises(ConfigError):
        parse_override("no_equals_sign")
    with pytest.raises(ConfigError):
        parse_override("bogus_key=1")


def test_disabled_vsm_gives_sg_only_scenario():
    config = ScenarioConfig(vsm_enabled=False)
    assert config.to_scenario().vsm is None
    assert config.vsm_params().h_vsm == 0.0
