"""
vsmsim/model/system.py
──────────────────────
Load-to-X transfer functions of the SG + VSM power-frequency model and
the first-order simplified loop models used for bandwidth estimation.

Sign conventions
  • ΔP_L > 0 is a load increase.
  • Δf(s) = -G_f(s)·ΔP_L(s), with

        G_f = s(T_SG s+1)(T_VSM s+1) / D(s)
        D   = ((H_SG+H_VSM)s + D_SG+D_VSM)(T_SG s+1)(T_VSM s+1)s
              + k_p,VSM s(T_SG s+1) + (k_p,SG s + k_i,SG)(T_VSM s+1)

  • Component powers are injections toward the grid (ESS discharging > 0):

        P_SG  = [(k_p,SG + k_i,SG/s)/(T_SG s+1) + H_SG s + D_SG] · G_f · ΔP_L
        P_HD  = (H_VSM s + D_VSM) · G_f · ΔP_L
        P_Gov = k_p,VSM/(T_VSM s+1) · G_f · ΔP_L

All four share D(s); the numerators are expanded directly over it and D is
assembled as their sum, so P_SG + P_HD + P_Gov = ΔP_L holds structurally.
The swing mass is H·s as written (not 2H·s).
"""

from __future__ import annotations
import logging
from dataclasses import dataclass

from vsmsim.errors import DegenerateModelError, InvalidParameterError
from vsmsim.lti import S, Polynomial, RationalTransferFunction, first_order_lag
from vsmsim.model.params import EssParams, SgParams, VsmParams

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SystemModel:
    g_f:      RationalTransferFunction    # load -> (minus) frequency deviation
    tf_p_sg:  RationalTransferFunction    # load -> SG power
    tf_p_hd:  RationalTransferFunction    # load -> virtual inertia + damping power
    tf_p_gov: RationalTransferFunction    # load -> virtual governor power
    sg:       SgParams
    vsm:      VsmParams
    ess:      EssParams | None
    base_frequency: float                 # Hz

    @property
    def tf_p_ess(self) -> RationalTransferFunction:
        return self.tf_p_hd + self.tf_p_gov


# ---------------------------------------------------------------------------
# Full model
# ---------------------------------------------------------------------------

def build_system(
    sg: SgParams,
    vsm: VsmParams,
    base_frequency: float = 60.0,
    ess: EssParams | None = None,
) -> SystemModel:
    if sg.h_sg + vsm.h_vsm <= 0:
        raise InvalidParameterError("h_vsm", "total inertia h_sg + h_vsm must be positive")
    if base_frequency <= 0:
        raise InvalidParameterError("base_frequency", "must be positive")

    lag_sg  = first_order_lag(sg.t_sg)
    lag_vsm = first_order_lag(vsm.t_vsm)
    s_lags  = S * lag_sg * lag_vsm                      # s(T_SG s+1)(T_VSM s+1)

    num_sg = (Polynomial((sg.ki_sg, sg.kp_sg)) * lag_vsm
              + Polynomial((sg.d_sg, sg.h_sg)) * s_lags)
    num_hd  = Polynomial((vsm.d_vsm, vsm.h_vsm)) * s_lags
    num_gov = vsm.kp_vsm * S * lag_sg

    den = num_sg + num_hd + num_gov
    model = SystemModel(
        g_f=RationalTransferFunction(s_lags, den),
        tf_p_sg=RationalTransferFunction(num_sg, den),
        tf_p_hd=RationalTransferFunction(num_hd, den),
        tf_p_gov=RationalTransferFunction(num_gov, den),
        sg=sg,
        vsm=vsm,
        ess=ess,
        base_frequency=base_frequency,
    )
    logger.debug("Built system: D(s) = %s", den)
    return model


def closed_secondary_characteristic(model: SystemModel) -> RationalTransferFunction:
    """G_f(s)/s with the common s cancelled; DC gain 1/k_i,SG."""
    return model.g_f.integrate().cancel_origin_factors()


# ---------------------------------------------------------------------------
# Loop corner frequencies (closed forms, rad/s)
# ---------------------------------------------------------------------------

def _proportional_total(sg: SgParams, vsm: VsmParams) -> float:
    return sg.kp_sg + vsm.kp_vsm + sg.d_sg + vsm.d_vsm


def primary_corner(sg: SgParams, vsm: VsmParams) -> float:
    """(k_p,SG + k_p,VSM + D_SG + D_VSM) / (H_SG + H_VSM)."""
    total = _proportional_total(sg, vsm)
    inertia = sg.h_sg + vsm.h_vsm
    if inertia <= 0:
        raise DegenerateModelError("primary", "total inertia h_sg + h_vsm is zero")
    if total <= 0:
        raise DegenerateModelError("primary", "kp_sg + kp_vsm + d_sg + d_vsm is zero")
    return total / inertia


def secondary_corner(sg: SgParams, vsm: VsmParams) -> float:
    """k_i,SG / (k_p,SG + k_p,VSM + D_SG + D_VSM)."""
    total = _proportional_total(sg, vsm)
    if sg.ki_sg <= 0:
        raise DegenerateModelError("secondary", "ki_sg is zero, there is no secondary action")
    if total <= 0:
        raise DegenerateModelError("secondary", "kp_sg + kp_vsm + d_sg + d_vsm is zero")
    return sg.ki_sg / total


def soc_corner(ess: EssParams) -> float:
    """k_p,e / E_nom."""
    if ess.kp_e <= 0:
        raise DegenerateModelError("soc", "kp_e is zero, the recovery loop is open")
    return ess.kp_e / ess.e_nom


# ---------------------------------------------------------------------------
# Simplified loop models (unit DC gain, first order)
# ---------------------------------------------------------------------------

def simplified_primary_model(sg: SgParams, vsm: VsmParams) -> RationalTransferFunction:
    return RationalTransferFunction.first_order(primary_corner(sg, vsm))


def simplified_secondary_model(sg: SgParams, vsm: VsmParams) -> RationalTransferFunction:
    return RationalTransferFunction.first_order(secondary_corner(sg, vsm))


def simplified_soc_model(ess: EssParams) -> RationalTransferFunction:
    return RationalTransferFunction.first_order(soc_corner(ess))


def soc_pi_model(ess: EssParams) -> RationalTransferFunction:
    """Recovery loop closed with its integral term: (k_p,e s + k_i,e)/(E_nom s² + k_p,e s + k_i,e)."""
    soc_corner(ess)
    pi = Polynomial((ess.ki_e, ess.kp_e))
    return RationalTransferFunction(pi, pi + Polynomial((0.0, 0.0, ess.e_nom)))
