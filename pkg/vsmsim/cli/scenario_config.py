"""
vsmsim/cli/scenario_config.py
─────────────────────────────
Scenario configuration files: one flat JSON object, unit in every key.

    {
      "h_sg_s": 2.5, "kp_sg_pu": 15, ...,
      "delta_p_l_pu": 0.375, "duration_s": 400
    }

Missing keys fall back to the built-in `table1` profile; unknown keys are
rejected.  Passing the literal name `table1` instead of a path loads the
profile itself.  Any failure surfaces as ConfigError with the key and,
when the file has one, the line.
"""

from __future__ import annotations
import json
import logging
import re
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ValidationError

from vsmsim.config import settings
from vsmsim.errors import ConfigError
from vsmsim.model.params import EssParams, SgParams, VsmParams
from vsmsim.model.profiles import (
    REFERENCE_BASE_FREQUENCY_HZ,
    REFERENCE_DELTA_P_L_PU,
    REFERENCE_DURATION_S,
    REFERENCE_ESS,
    REFERENCE_SG,
    REFERENCE_STEP_TIME_S,
    REFERENCE_VSM,
)
from vsmsim.sim.state import Scenario

logger = logging.getLogger(__name__)

BUILTIN_PROFILE = "table1"


class ScenarioConfig(BaseModel):
    # ── synchronous generator ──────────────────────────────────────────
    h_sg_s:          float = REFERENCE_SG.h_sg
    d_sg_pu:         float = REFERENCE_SG.d_sg
    kp_sg_pu:        float = REFERENCE_SG.kp_sg
    ki_sg_pu_per_s:  float = REFERENCE_SG.ki_sg
    t_sg_s:          float = REFERENCE_SG.t_sg

    # ── virtual synchronous machine ────────────────────────────────────
    vsm_enabled:     bool  = True
    h_vsm_s:         float = REFERENCE_VSM.h_vsm
    d_vsm_pu:        float = REFERENCE_VSM.d_vsm
    kp_vsm_pu:       float = REFERENCE_VSM.kp_vsm
    t_vsm_s:         float = REFERENCE_VSM.t_vsm

    # ── energy storage + SoC recovery ─────────────────────────────────
    e_nom_pu_s:      float = REFERENCE_ESS.e_nom
    soc_ref:         float = REFERENCE_ESS.soc_ref
    soc_ini:         float = REFERENCE_ESS.soc_ini
    kp_e_pu:         float = REFERENCE_ESS.kp_e
    ki_e_pu_per_s:   float = REFERENCE_ESS.ki_e
    p_rating_pu:     float = REFERENCE_ESS.p_rating

    # ── experiment ─────────────────────────────────────────────────────
    recovery_enabled:   bool  = True
    saturation_enabled: bool  = False
    step_time_s:        float = REFERENCE_STEP_TIME_S
    delta_p_l_pu:       float = REFERENCE_DELTA_P_L_PU
    duration_s:         float = REFERENCE_DURATION_S
    dt_s:               float = settings.simulator.dt
    base_frequency_hz:  float = REFERENCE_BASE_FREQUENCY_HZ

    model_config = {"extra": "forbid", "frozen": True}

    # ── conversion to domain records ───────────────────────────────────
    def sg_params(self) -> SgParams:
        return _build(SgParams, self, h_sg="h_sg_s", d_sg="d_sg_pu", kp_sg="kp_sg_pu",
                      ki_sg="ki_sg_pu_per_s", t_sg="t_sg_s")

    def vsm_params(self) -> VsmParams:
        """VSM record even when vsm_enabled is false (used by the analysis commands)."""
        if not self.vsm_enabled:
            return VsmParams.inactive(self.t_vsm_s)
        return _build(VsmParams, self, h_vsm="h_vsm_s", d_vsm="d_vsm_pu", kp_vsm="kp_vsm_pu",
                      t_vsm="t_vsm_s")

    def ess_params(self) -> EssParams:
        return _build(EssParams, self, e_nom="e_nom_pu_s", soc_ref="soc_ref", soc_ini="soc_ini",
                      kp_e="kp_e_pu", ki_e="ki_e_pu_per_s", p_rating="p_rating_pu")

    def to_scenario(self) -> Scenario:
        fields = dict(
            step_time="step_time_s", delta_p_l="delta_p_l_pu", duration="duration_s",
            dt="dt_s", base_frequency="base_frequency_hz",
        )
        return _build(
            Scenario, self,
            extra=dict(
                sg=self.sg_params(),
                vsm=self.vsm_params() if self.vsm_enabled else None,
                ess=self.ess_params(),
                recovery_enabled=self.recovery_enabled,
                saturation_enabled=self.saturation_enabled,
            ),
            **fields,
        )

    def with_overrides(self, **values: Any) -> ScenarioConfig:
        return _validate_config({**self.model_dump(), **values})


def _build(model: type[BaseModel], config: ScenarioConfig, extra: dict | None = None, **mapping: str):
    """Instantiate `model` from config keys, reporting failures under the config key names."""
    kwargs = {name: getattr(config, key) for name, key in mapping.items()}
    kwargs.update(extra or {})
    try:
        return model(**kwargs)
    except ValidationError as exc:
        problems = []
        for err in exc.errors():
            name = str(err["loc"][0]) if err["loc"] else ""
            problems.append(f"{mapping.get(name, name)}: {err['msg']}")
        first = str(exc.errors()[0]["loc"][0]) if exc.errors()[0]["loc"] else None
        raise ConfigError("; ".join(problems), key=mapping.get(first, first)) from exc


# ---------------------------------------------------------------------------
# Reading / writing
# ---------------------------------------------------------------------------

def _line_of(key: str, text: str) -> int | None:
    match = re.search(rf'"{re.escape(key)}"\s*:', text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1


def _validate_config(data: dict[str, Any], text: str = "") -> ScenarioConfig:
    try:
        return ScenarioConfig(**data)
    except ValidationError as exc:
        errors = exc.errors()
        keys = [str(e["loc"][0]) for e in errors if e["loc"]]
        detail = "; ".join(f"{k}: {e['msg']}" for k, e in zip(keys, errors))
        first = keys[0] if keys else None
        raise ConfigError(f"invalid configuration: {detail}", key=first,
                          line=_line_of(first, text) if first else None) from exc


def parse_override(item: str) -> tuple[str, Any]:
    """'key=value' -> (key, JSON-decoded value, or the raw string)."""
    if "=" not in item:
        raise ConfigError(f"override '{item}' is not KEY=VALUE")
    key, raw = item.split("=", 1)
    key = key.strip()
    if key not in ScenarioConfig.model_fields:
        raise ConfigError("unknown configuration key", key=key)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def load_config(source: str | Path, overrides: list[str] | None = None) -> ScenarioConfig:
    if str(source) == BUILTIN_PROFILE:
        data: dict[str, Any] = {}
        text = ""
    else:
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed JSON: {exc.msg}", line=exc.lineno) from exc
        if not isinstance(data, dict):
            raise ConfigError("configuration must be a single JSON object")
        nested = [k for k, v in data.items() if isinstance(v, (dict, list))]
        if nested:
            raise ConfigError("configuration must be one level deep", key=nested[0],
                              line=_line_of(nested[0], text))

    for item in overrides or []:
        key, value = parse_override(item)
        data[key] = value

    config = _validate_config(data, text)
    logger.debug("Loaded config from %s", source)
    return config


def dump_config(config: ScenarioConfig, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(config.model_dump(), indent=2) + "\n")
    return path
