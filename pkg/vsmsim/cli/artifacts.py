"""
vsmsim/cli/artifacts.py
───────────────────────
Flat-file outputs.  CSVs carry 17 significant digits so convergence
checks on them stay meaningful; JSON is indented and key-stable.
"""

from __future__ import annotations
import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from vsmsim.lti import RationalTransferFunction, frequency_response, phase_deg
from vsmsim.sim.state import SimulationMetrics, SimulationResult

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"

TIMESERIES_FILE = "timeseries.csv"
METRICS_FILE    = "metrics.json"
BODE_FILE       = "bode.csv"
SWEEP_FILE      = "sweep_summary.csv"


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep="")
    logger.info("Wrote %s (%d rows)", path, len(frame))
    return path


def write_json(payload: Any, path: Path) -> Path:
    path.write_text(json.dumps(payload, indent=2) + "\n")
    logger.info("Wrote %s", path)
    return path


def write_metrics(metrics: SimulationMetrics, path: Path) -> Path:
    return write_json(metrics.model_dump(), path)


def write_simulation(result: SimulationResult, out_dir: Path) -> Path:
    """timeseries.csv + metrics.json into out_dir (created if needed)."""
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(result.series, out_dir / TIMESERIES_FILE)
    write_metrics(result.metrics, out_dir / METRICS_FILE)
    return out_dir


def bode_table(tf: RationalTransferFunction, omega_lo: float, omega_hi: float, points: int) -> pd.DataFrame:
    """
    Log-spaced magnitude/phase table.  Rows where the grid hits a pole keep
    their omega but have blank magnitude and phase.
    """
    if not 0 < omega_lo < omega_hi:
        raise ValueError("omega range must satisfy 0 < lo < hi")
    if points < 2:
        raise ValueError("at least two points are required")
    omegas = np.logspace(np.log10(omega_lo), np.log10(omega_hi), points)
    response = frequency_response(tf, omegas)
    with np.errstate(divide="ignore", invalid="ignore"):
        magnitude = 20.0 * np.log10(np.abs(response))
    magnitude[~np.isfinite(response)] = np.nan
    return pd.DataFrame({
        "omega_rad_s":  omegas,
        "magnitude_db": magnitude,
        "phase_deg":    phase_deg(tf, omegas),
    })
