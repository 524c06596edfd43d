"""
vsmsim/sim/simulator.py
───────────────────────
Time-domain integration of the SG + ESS-VSM frequency loop with SoC
recovery, for one step-load event.

Signal flow per evaluation (all p.u.)
  SoC      = soc_ini - e_discharged / e_nom
  p_rec    = -(kp_e·(soc_ref - SoC) + z_rec)          SoC low -> charge
  z_rec    = ki_e/s·(soc_ref - SoC), integrating only while |soc_ref - SoC| is
           inside the recovery band (conditional anti-windup)
  swing    (H_SG+H_VSM)·dΔf/dt = p_gov_sg_lag + p_vsm_lag - (D_SG+D_VSM)·Δf - ΔP_L
  SG       p_gov_sg_lag = (-kp_sg·Δf + z_sec)/(T_SG s+1),  z_sec = -ki_sg/s·Δf
  VSM      p_vsm_lag = (-kp_vsm·Δf + p_rec)/(T_VSM s+1)
  ESS      p_hd = -(H_VSM·dΔf/dt + D_VSM·Δf),  p_ess = p_hd + p_vsm_lag

p_hd is algebraic (taken from the swing right-hand side), never a
numerical derivative of Δf.  With the optional saturation the ESS output
is clipped to ±p_rating and the swing is re-solved with the SG alone
carrying inertia, so p_sg + p_ess = ΔP_L keeps holding.
"""

from __future__ import annotations
import logging
import math
import time

import numpy as np
import pandas as pd

from vsmsim.config import settings
from vsmsim.errors import IntegrationError
from vsmsim.model.params import VsmParams
from vsmsim.sim.integrator import rk4_step
from vsmsim.sim.metrics import compute_metrics
from vsmsim.sim.state import SERIES_COLUMNS, STEP_EPS, Scenario, SimulationResult, SimulationState

logger = logging.getLogger(__name__)


def load_at(t: float, scenario: Scenario) -> float:
    return scenario.delta_p_l if t >= scenario.step_time - STEP_EPS else 0.0


class _Plant:
    """Scenario constants unpacked once; evaluates rates and algebraic outputs."""

    def __init__(self, scenario: Scenario):
        sg, ess = scenario.sg, scenario.ess
        vsm = scenario.vsm or VsmParams.inactive()
        self.active    = scenario.ess_active
        self.recovery  = scenario.recovery_enabled and self.active
        self.saturate  = scenario.saturation_enabled and self.active
        self.h_sg, self.d_sg, self.kp_sg, self.ki_sg, self.t_sg = sg.h_sg, sg.d_sg, sg.kp_sg, sg.ki_sg, sg.t_sg
        self.h_vsm, self.d_vsm, self.kp_vsm, self.t_vsm = vsm.h_vsm, vsm.d_vsm, vsm.kp_vsm, vsm.t_vsm
        self.h_t = self.h_sg + self.h_vsm
        self.d_t = self.d_sg + self.d_vsm
        self.e_nom, self.soc_ini, self.soc_ref = ess.e_nom, ess.soc_ini, ess.soc_ref
        self.kp_e, self.ki_e, self.p_rating = ess.kp_e, ess.ki_e, ess.p_rating
        self.ki_band = settings.simulator.recovery_integral_band

    def solve(self, x, load: float):
        """(dΔf/dt, p_rec, p_hd, p_ess, soc, recovery error, saturated) at state x."""
        df, pg, _, pv, e, zr = x
        soc = self.soc_ini - e / self.e_nom
        err = self.soc_ref - soc
        p_rec = -(self.kp_e * err + zr) if self.recovery else 0.0

        ddf = (pg + pv - self.d_t * df - load) / self.h_t
        p_hd = -(self.h_vsm * ddf + self.d_vsm * df)
        p_ess = p_hd + pv
        saturated = False
        if self.saturate and abs(p_ess) > self.p_rating:
            p_ess = math.copysign(self.p_rating, p_ess)
            ddf = (pg - self.d_sg * df + p_ess - load) / self.h_sg
            p_hd = p_ess - pv
            saturated = True
        return ddf, p_rec, p_hd, p_ess, soc, err, saturated

    def rates(self, x: np.ndarray, load: float) -> np.ndarray:
        values = x.tolist()
        df, pg, z, pv = values[:4]
        ddf, p_rec, _, p_ess, _, err, _ = self.solve(values, load)
        return np.array((
            ddf,
            (-self.kp_sg * df + z - pg) / self.t_sg,
            -self.ki_sg * df,
            (-self.kp_vsm * df + p_rec - pv) / self.t_vsm,
            p_ess,
            self.ki_e * err if self.recovery and abs(err) < self.ki_band else 0.0,
        ))

    def p_sg_total(self, x, ddf: float) -> float:
        return x[1] - self.h_sg * ddf - self.d_sg * x[0]


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def derivative(state: SimulationState, t: float, scenario: Scenario) -> SimulationState:
    """Time derivative of every state at (state, t)."""
    plant = _Plant(scenario)
    x = state.as_array()
    rates = plant.rates(x, load_at(t, scenario))
    if not np.all(np.isfinite(rates)):
        raise IntegrationError(t, "non-finite state derivative")
    return SimulationState.from_array(rates)


def run(scenario: Scenario, decimation: int | None = None) -> SimulationResult:
    """
    Integrate from t=0 to scenario.duration with fixed-step RK4 and record
    every `decimation`-th step (default from settings).
    """
    if decimation is None:
        decimation = settings.simulator.decimation
    if decimation < 1:
        raise ValueError("decimation must be >= 1")

    dt = scenario.dt
    fastest = scenario.sg.t_sg if scenario.vsm is None else min(scenario.sg.t_sg, scenario.vsm.t_vsm)
    if dt > fastest / 10:
        logger.warning("Step size dt=%g s exceeds a tenth of the fastest lag (%g s)", dt, fastest)

    plant = _Plant(scenario)
    n_steps = scenario.n_steps
    n_rec = n_steps // decimation + 1
    out = np.empty((n_rec, len(SERIES_COLUMNS)))

    x = np.zeros(6)
    saturated = False
    soc_warned = False
    started = time.perf_counter()
    logger.info(
        "Simulating %.1f s at dt=%g s (vsm=%s, recovery=%s, step %.3f p.u. at %.1f s)",
        scenario.duration, dt, scenario.ess_active, plant.recovery,
        scenario.delta_p_l, scenario.step_time,
    )

    row = 0
    for k in range(n_steps + 1):
        t = k * dt
        if k % decimation == 0:
            ddf, p_rec, p_hd, p_ess, soc, _, sat = plant.solve(x.tolist(), load_at(t, scenario))
            out[row] = (
                t,
                scenario.base_frequency * (1.0 + x[0]),
                plant.p_sg_total(x, ddf),
                p_hd,
                x[3],
                p_rec,
                p_ess,
                soc,
            )
            row += 1
            if sat and not saturated:
                logger.warning("ESS power saturated at ±%g p.u. (t=%.3f s)", scenario.ess.p_rating, t)
                saturated = True
            if not soc_warned and not 0.0 <= soc <= 1.0:
                logger.warning("SoC left [0, 1] at t=%.3f s (SoC=%.4f)", t, soc)
                soc_warned = True
        if k == n_steps:
            break
        x = rk4_step(plant.rates, x, load_at(t + 0.5 * dt, scenario), dt)
        if not np.isfinite(x).all():
            raise IntegrationError(t + dt)

    series = pd.DataFrame(out, columns=list(SERIES_COLUMNS))
    metrics = compute_metrics(series, scenario, saturated=saturated)
    if metrics.max_power_balance_residual > settings.simulator.balance_tolerance:
        logger.warning("Power balance residual %.3e p.u. exceeds %.1e",
                       metrics.max_power_balance_residual, settings.simulator.balance_tolerance)
    logger.info(
        "Done in %.2f s: nadir %.4f Hz at %.3f s, SoC final %.4f, settling %s",
        time.perf_counter() - started, metrics.nadir_hz, metrics.nadir_time_s,
        metrics.soc_final, metrics.soc_settling_time_s,
    )
    return SimulationResult(scenario=scenario, series=series, metrics=metrics)
