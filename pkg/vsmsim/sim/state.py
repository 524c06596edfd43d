"""
vsmsim/sim/state.py
───────────────────
Types that flow through a simulation run.

  Scenario          immutable experiment description (validated)
  SimulationState   the six integrator states
  SimulationMetrics scalar results, the metrics.json schema
  SimulationResult  recorded series + metrics

State vector layout (index → field)
───────────────────────────────────
  0  delta_f        p.u. frequency deviation            swing equation
  1  p_gov_sg_lag   SG governor lag output, p.u.        1/(T_SG s+1)
  2  z_sec          SG secondary integrator, p.u.       k_i,SG/s
  3  p_vsm_lag      VSM governor + recovery lag, p.u.   1/(T_VSM s+1)
  4  e_discharged   ∫ P_ESS dt, p.u.·s                  1/(E_nom s) up to scale
  5  z_rec          recovery PI integrator, p.u.        k_i,e/s
"""

from __future__ import annotations
from dataclasses import dataclass, fields

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field, model_validator

from vsmsim.model.params import EssParams, SgParams, VsmParams

SERIES_COLUMNS = (
    "time_s", "freq_hz", "p_sg_pu", "p_hd_pu", "p_gov_vsm_pu", "p_rec_pu", "p_ess_pu", "soc",
)

# load switches on at step_time; tolerance absorbs k·dt round-off
STEP_EPS = 1e-9


class Scenario(BaseModel):
    sg:  SgParams
    vsm: VsmParams | None = None          # None: SG alone, ESS idle
    ess: EssParams
    recovery_enabled:   bool  = True
    saturation_enabled: bool  = False
    step_time:      float = Field(10.0, ge=0, description="s")
    delta_p_l:      float = Field(0.375, ge=-2, le=2, description="p.u., > 0 is a load increase")
    duration:       float = Field(400.0, gt=0, description="s")
    dt:             float = Field(1e-3, gt=0, le=0.01, description="s")
    base_frequency: float = Field(60.0, gt=0, description="Hz")

    model_config = {"frozen": True, "extra": "forbid"}

    @model_validator(mode="after")
    def _check_horizon(self) -> Scenario:
        if self.duration <= self.step_time:
            raise ValueError("duration must exceed step_time")
        return self

    @property
    def ess_active(self) -> bool:
        return self.vsm is not None

    @property
    def n_steps(self) -> int:
        return int(round(self.duration / self.dt))


@dataclass(frozen=True)
class SimulationState:
    delta_f:      float = 0.0
    p_gov_sg_lag: float = 0.0
    z_sec:        float = 0.0
    p_vsm_lag:    float = 0.0
    e_discharged: float = 0.0
    z_rec:        float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, f.name) for f in fields(self)], dtype=float)

    @classmethod
    def from_array(cls, x: np.ndarray) -> SimulationState:
        return cls(*(float(v) for v in x))


class SimulationMetrics(BaseModel):
    nadir_hz:                   float
    nadir_time_s:               float
    freq_steady_hz:             float
    soc_min:                    float
    soc_final:                  float
    soc_settling_time_s:        float | None
    max_power_balance_residual: float
    soc_drop:                   float
    peak_p_ess_pu:              float
    max_rocof_hz_per_s:         float
    saturated:                  bool = False


@dataclass(frozen=True, eq=False)
class SimulationResult:
    scenario: Scenario
    series:   pd.DataFrame          # columns: SERIES_COLUMNS
    metrics:  SimulationMetrics
