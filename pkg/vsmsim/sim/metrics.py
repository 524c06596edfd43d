"""
vsmsim/sim/metrics.py
─────────────────────
Scalar metrics extracted from a recorded series.  Absent results (SoC
never settles) are None, never a sentinel number.
"""

from __future__ import annotations

import numpy as np
import pandas as pd

from vsmsim.config import settings
from vsmsim.sim.state import STEP_EPS, Scenario, SimulationMetrics


def settling_time(time_s: np.ndarray, values: np.ndarray, target: float, band: float,
                  start: float) -> float | None:
    """First t >= start after which |values - target| < band for every later sample."""
    after = time_s >= start - STEP_EPS
    t = time_s[after]
    v = values[after]
    if t.size == 0:
        return None
    outside = np.flatnonzero(np.abs(v - target) >= band)
    if outside.size == 0:
        return float(t[0])
    last = int(outside[-1])
    if last == t.size - 1:
        return None
    return float(t[last + 1])


def compute_metrics(series: pd.DataFrame, scenario: Scenario, saturated: bool = False) -> SimulationMetrics:
    if series.empty:
        raise ValueError("cannot compute metrics of an empty series")
    cfg = settings.simulator
    t    = series["time_s"].to_numpy()
    freq = series["freq_hz"].to_numpy()
    soc  = series["soc"].to_numpy()

    i_nadir = int(np.argmin(freq))
    tail = max(1, int(np.ceil(cfg.steady_window_fraction * len(freq))))

    load = np.where(t >= scenario.step_time - STEP_EPS, scenario.delta_p_l, 0.0)
    residual = np.abs(series["p_sg_pu"].to_numpy() + series["p_ess_pu"].to_numpy() - load)

    rocof = np.abs(np.gradient(freq, t)) if len(t) > 1 else np.zeros(1)

    return SimulationMetrics(
        nadir_hz=float(freq[i_nadir]),
        nadir_time_s=float(t[i_nadir]),
        freq_steady_hz=float(freq[-tail:].mean()),
        soc_min=float(soc.min()),
        soc_final=float(soc[-1]),
        soc_settling_time_s=settling_time(t, soc, scenario.ess.soc_ref, cfg.settling_band, scenario.step_time),
        max_power_balance_residual=float(residual.max()),
        soc_drop=float(scenario.ess.soc_ini - soc.min()),
        peak_p_ess_pu=float(np.abs(series["p_ess_pu"].to_numpy()).max()),
        max_rocof_hz_per_s=float(rocof.max()),
        saturated=saturated,
    )
