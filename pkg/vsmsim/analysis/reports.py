"""
vsmsim/analysis/reports.py
──────────────────────────
Pydantic result models for the analysis layer.  The CLI dumps them
straight to JSON, so field names here are the public schema.
"""

from __future__ import annotations
from typing import NamedTuple

from pydantic import BaseModel, Field, computed_field


class EnergyReport(BaseModel):
    """Steady-state ESS energy per VSM service for one load step (p.u.·s)."""
    delta_e_hd:  float = Field(..., description="virtual inertia + damping")
    delta_e_gov: float = Field(..., description="virtual governor")
    delta_soc:   float = Field(..., description="delta_e_vsm / e_nom")
    delta_p_l:   float = Field(..., description="disturbance, p.u.")

    model_config = {"frozen": True}

    @computed_field
    @property
    def delta_e_vsm(self) -> float:
        return self.delta_e_hd + self.delta_e_gov

    def as_output(self) -> dict[str, float]:
        return {
            "delta_e_hd_pu_s":  self.delta_e_hd,
            "delta_e_gov_pu_s": self.delta_e_gov,
            "delta_e_vsm_pu_s": self.delta_e_vsm,
            "delta_soc":        self.delta_soc,
        }


class BandwidthEstimate(NamedTuple):
    primary:   float
    secondary: float
    soc:       float


class BandwidthReport(BaseModel):
    """Analytic vs measured loop bandwidths (rad/s) and the separation verdict."""
    primary_analytic:   float
    secondary_analytic: float
    soc_analytic:       float
    primary_measured:   float
    secondary_measured: float
    soc_measured:       float
    separation_factor:  float
    separation_ratios:  tuple[float, float]     # (primary/secondary, secondary/soc)
    separation_ok:      bool

    # informational diagnostics
    secondary_full_model: float | None = None   # -3 dB of G_f(s)/s
    soc_pi_measured:      float | None = None   # -3 dB of the PI-closed recovery loop
    third_control_bw:     float | None = None
    soc_above_third:      bool | None = None

    model_config = {"frozen": True}
