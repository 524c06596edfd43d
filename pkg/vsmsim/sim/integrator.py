"""
vsmsim/sim/integrator.py
────────────────────────
Classical fixed-step 4th-order Runge-Kutta.

The input u is held constant across the four stages (zero-order hold), so
a step input that switches on a grid point never lands inside a step.
"""

from __future__ import annotations
from typing import Callable

import numpy as np

Rates = Callable[[np.ndarray, float], np.ndarray]


def rk4_step(f: Rates, x: np.ndarray, u: float, h: float) -> np.ndarray:
    """
    Advance x by one step h.

    INPUTS:
        f - state derivative, xdot = f(x, u)
        x - current state vector
        u - input held over the step
        h - step size, s
    """
    k1 = f(x, u)
    k2 = f(x + 0.5 * h * k1, u)
    k3 = f(x + 0.5 * h * k2, u)
    k4 = f(x + h * k3, u)
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
