"""
vsmsim/model/params.py
──────────────────────
Physical and control constants, one immutable record per machine.
All quantities are per-unit on a single shared power base; time constants
and inertia in seconds, energy in p.u.·s.

Validation happens on construction (pydantic), so an SgParams that exists
is a valid SgParams.
"""

from __future__ import annotations
from pydantic import BaseModel, Field


class _Params(BaseModel):
    model_config = {"frozen": True, "extra": "forbid"}


class SgParams(_Params):
    """Synchronous generator with governor lag and secondary integral."""
    h_sg:  float = Field(..., gt=0, description="inertia constant, s")
    d_sg:  float = Field(..., ge=0, description="damping, p.u.")
    kp_sg: float = Field(..., ge=0, description="governor proportional gain, p.u.")
    ki_sg: float = Field(..., ge=0, description="secondary integral gain, p.u./s")
    t_sg:  float = Field(..., gt=0, description="governor lag, s")


class VsmParams(_Params):
    """Virtual synchronous machine emulated by the ESS converter."""
    h_vsm:  float = Field(..., ge=0, description="virtual inertia, s")
    d_vsm:  float = Field(..., ge=0, description="virtual damping, p.u.")
    kp_vsm: float = Field(..., ge=0, description="virtual governor gain, p.u.")
    t_vsm:  float = Field(..., gt=0, description="VSM lag, s")

    @classmethod
    def inactive(cls, t_vsm: float = 0.3) -> VsmParams:
        """A VSM that contributes nothing (all gains and inertia zero)."""
        return cls(h_vsm=0.0, d_vsm=0.0, kp_vsm=0.0, t_vsm=t_vsm)


class EssParams(_Params):
    """Energy storage behind the VSM plus its SoC recovery PI."""
    e_nom:    float = Field(..., gt=0, description="energy capacity, p.u.·s")
    soc_ref:  float = Field(..., ge=0, le=1, description="target SoC")
    soc_ini:  float = Field(..., ge=0, le=1, description="initial SoC")
    kp_e:     float = Field(..., ge=0, description="recovery proportional gain, p.u.")
    ki_e:     float = Field(..., ge=0, description="recovery integral gain, p.u./s")
    p_rating: float = Field(..., gt=0, description="power rating, p.u.")
