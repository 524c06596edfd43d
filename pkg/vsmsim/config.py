"""
vsmsim/config.py
────────────────
Single source of truth for every numerical tunable.
Reads from environment (and .env via python-dotenv).

Physical parameters are NOT here: they travel as validated models
(see vsmsim/model/params.py) so a run is fully described by its Scenario.
"""

from __future__ import annotations
from pydantic_settings import BaseSettings


# ---------------------------------------------------------------------------
# Sub-settings  (grouped for clarity)
# ---------------------------------------------------------------------------

class LtiSettings(BaseSettings):
    pole_tolerance:         float = 1e-12      # relative to max(1, largest |coef|)
    cancel_tolerance:       float = 1e-12      # s-factor test, relative to largest |coef|
    stability_margin:       float = 1e-9       # Re(pole) must be below -margin
    bandwidth_omega_min:    float = 1e-4       # rad/s
    bandwidth_omega_max:    float = 1e4        # rad/s
    bandwidth_scan_points: int   = 400
    bandwidth_rtol:         float = 1e-6

    model_config = {"env_prefix": "VSMSIM_LTI_"}


class SimulatorSettings(BaseSettings):
    dt:                     float = 1e-3       # s
    decimation:             int   = 10         # record every N steps
    settling_band:          float = 0.002      # |SoC - soc_ref|
    steady_window_fraction: float = 0.05       # tail used for freq_steady
    balance_tolerance:      float = 1e-6       # p.u.
    recovery_integral_band: float = 0.01       # |SoC error| below which z_rec integrates
    sweep_workers:          int | None = None  # None -> CPU count

    model_config = {"env_prefix": "VSMSIM_SIM_"}


class AnalysisSettings(BaseSettings):
    separation_factor: float = 2.0
    agreement_rtol:    float = 1e-9

    model_config = {"env_prefix": "VSMSIM_ANALYSIS_"}


# ---------------------------------------------------------------------------
# Root settings  – the only object the rest of the package imports
# ---------------------------------------------------------------------------

class Settings(BaseSettings):
    lti:       LtiSettings       = LtiSettings()
    simulator: SimulatorSettings = SimulatorSettings()
    analysis:  AnalysisSettings  = AnalysisSettings()

    log_level: str = "INFO"

    model_config = {"env_file": ".env", "env_prefix": "VSMSIM_", "extra": "ignore"}


# ---------------------------------------------------------------------------
# Module-level singleton  –  `from vsmsim.config import settings`
# ---------------------------------------------------------------------------
settings = Settings()
