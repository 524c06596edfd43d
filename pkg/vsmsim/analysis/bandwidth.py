"""
vsmsim/analysis/bandwidth.py
────────────────────────────
Bandwidths of the three nested loops (primary frequency, secondary
frequency, SoC recovery): closed-form estimates, -3 dB measurements on
the simplified models, and the separation verdict soc << secondary << primary.
"""

from __future__ import annotations
import logging

from vsmsim.config import settings
from vsmsim.analysis.reports import BandwidthEstimate, BandwidthReport
from vsmsim.errors import VsmSimError
from vsmsim.lti import measure_bandwidth
from vsmsim.model.params import EssParams, SgParams, VsmParams
from vsmsim.model.system import (
    build_system,
    closed_secondary_characteristic,
    primary_corner,
    secondary_corner,
    simplified_primary_model,
    simplified_secondary_model,
    simplified_soc_model,
    soc_corner,
    soc_pi_model,
)

logger = logging.getLogger(__name__)


def estimate_bandwidths(sg: SgParams, vsm: VsmParams, ess: EssParams) -> BandwidthEstimate:
    return BandwidthEstimate(
        primary=primary_corner(sg, vsm),
        secondary=secondary_corner(sg, vsm),
        soc=soc_corner(ess),
    )


def _diagnostic(label: str, fn) -> float | None:
    try:
        return fn()
    except VsmSimError as exc:
        logger.info("No %s diagnostic: %s", label, exc)
        return None


def bandwidth_report(
    sg: SgParams,
    vsm: VsmParams,
    ess: EssParams,
    separation_factor: float | None = None,
    third_control_bw: float | None = None,
) -> BandwidthReport:
    if separation_factor is None:
        separation_factor = settings.analysis.separation_factor
    if separation_factor < 1:
        raise ValueError("separation_factor must be >= 1")

    analytic = estimate_bandwidths(sg, vsm, ess)
    primary_measured   = measure_bandwidth(simplified_primary_model(sg, vsm), 1.0)
    secondary_measured = measure_bandwidth(simplified_secondary_model(sg, vsm), 1.0)
    soc_measured       = measure_bandwidth(simplified_soc_model(ess), 1.0)

    ratios = (analytic.primary / analytic.secondary, analytic.secondary / analytic.soc)
    separation_ok = ratios[0] >= separation_factor and ratios[1] >= separation_factor
    if not separation_ok:
        logger.warning(
            "Bandwidth separation violated: primary/secondary = %.3f, secondary/soc = %.3f (factor %.3g)",
            ratios[0], ratios[1], separation_factor,
        )

    secondary_full = _diagnostic(
        "full-model secondary",
        lambda: measure_bandwidth(
            closed_secondary_characteristic(build_system(sg, vsm)), 1.0 / sg.ki_sg
        ),
    )
    soc_pi = _diagnostic("PI recovery loop", lambda: measure_bandwidth(soc_pi_model(ess), 1.0))

    soc_above_third = None
    if third_control_bw is not None:
        soc_above_third = analytic.soc > third_control_bw

    report = BandwidthReport(
        primary_analytic=analytic.primary,
        secondary_analytic=analytic.secondary,
        soc_analytic=analytic.soc,
        primary_measured=primary_measured,
        secondary_measured=secondary_measured,
        soc_measured=soc_measured,
        separation_factor=separation_factor,
        separation_ratios=ratios,
        separation_ok=separation_ok,
        secondary_full_model=secondary_full,
        soc_pi_measured=soc_pi,
        third_control_bw=third_control_bw,
        soc_above_third=soc_above_third,
    )
    logger.info(
        "Bandwidths (rad/s): primary %.4g, secondary %.4g, soc %.4g, separation_ok=%s",
        analytic.primary, analytic.secondary, analytic.soc, separation_ok,
    )
    return report
