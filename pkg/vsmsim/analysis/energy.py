"""
vsmsim/analysis/energy.py
─────────────────────────
Steady-state energy the ESS spends on VSM services after a load step.

Two independent paths that must agree:

  energy_report                   closed form
        ΔE_HD  = D_VSM  · ΔP_L / k_i,SG
        ΔE_Gov = k_p,VSM · ΔP_L / k_i,SG
        ΔE_VSM = ΔE_HD + ΔE_Gov

  energy_report_via_final_value   lim_{s→0} s · (P_X(s)/s) · ΔP_L/s
                                  on the built transfer functions.

Inertia never appears: it is energy-neutral once frequency is restored.
Everything scales with 1/k_i,SG because the SG secondary integral is what
finally takes the load off the ESS.
"""

from __future__ import annotations
import logging

from vsmsim.errors import DivergenceError
from vsmsim.analysis.reports import EnergyReport
from vsmsim.lti import final_value_of_step_response
from vsmsim.model.params import EssParams, SgParams, VsmParams
from vsmsim.model.system import SystemModel

logger = logging.getLogger(__name__)

DIVERGENCE_MESSAGE = (
    "steady-state ESS energy is proportional to 1/ki_sg; with ki_sg = 0 the SG "
    "secondary integral never relieves the ESS and the energy grows without bound"
)


def energy_report(sg: SgParams, vsm: VsmParams, ess: EssParams, delta_p_l: float) -> EnergyReport:
    if sg.ki_sg <= 0:
        raise DivergenceError(DIVERGENCE_MESSAGE)
    delta_e_hd  = (vsm.d_vsm / sg.ki_sg) * delta_p_l
    delta_e_gov = (vsm.kp_vsm / sg.ki_sg) * delta_p_l
    return EnergyReport(
        delta_e_hd=delta_e_hd,
        delta_e_gov=delta_e_gov,
        delta_soc=(delta_e_hd + delta_e_gov) / ess.e_nom,
        delta_p_l=delta_p_l,
    )


def energy_report_via_final_value(model: SystemModel, ess: EssParams, delta_p_l: float) -> EnergyReport:
    try:
        delta_e_hd  = final_value_of_step_response(model.tf_p_hd.integrate(), delta_p_l)
        delta_e_gov = final_value_of_step_response(model.tf_p_gov.integrate(), delta_p_l)
    except DivergenceError as exc:
        raise DivergenceError(f"{DIVERGENCE_MESSAGE} ({exc})") from exc
    return EnergyReport(
        delta_e_hd=delta_e_hd,
        delta_e_gov=delta_e_gov,
        delta_soc=(delta_e_hd + delta_e_gov) / ess.e_nom,
        delta_p_l=delta_p_l,
    )


def max_relative_difference(a: EnergyReport, b: EnergyReport) -> float:
    """Largest relative gap between the energy fields of two reports (0 when both are zero)."""
    worst = 0.0
    for x, y in zip(a.as_output().values(), b.as_output().values()):
        scale = max(abs(x), abs(y))
        if scale > 0:
            worst = max(worst, abs(x - y) / scale)
    return worst
