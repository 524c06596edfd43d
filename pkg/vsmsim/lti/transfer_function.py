"""
vsmsim/lti/transfer_function.py
───────────────────────────────
Rational transfer functions N(s)/D(s) and the few frequency-domain tools
the analysis needs:

  • evaluate / frequency_response     – point and vectorised evaluation
  • magnitude_db / phase_deg          – Bode quantities
  • measure_bandwidth                 – first -3 dB crossing below a DC reference
  • final_value_of_step_response      – lim_{s→0} s·G(s)·A/s with exact s-cancellation

Everything is immutable and pure.
"""

from __future__ import annotations
import logging
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from vsmsim.config import settings
from vsmsim.errors import DivergenceError, InstabilityError, NoCrossingError, PoleHitError
from vsmsim.lti.polynomial import ONE, S, Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RationalTransferFunction:
    numerator:   Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if not isinstance(self.numerator, Polynomial):
            object.__setattr__(self, "numerator", Polynomial(self.numerator))
        if not isinstance(self.denominator, Polynomial):
            object.__setattr__(self, "denominator", Polynomial(self.denominator))
        if self.denominator.is_zero:
            raise ValueError("transfer function denominator is the zero polynomial")

    # ── constructors ───────────────────────────────────────────────────
    @classmethod
    def constant(cls, gain: float) -> RationalTransferFunction:
        return cls(Polynomial(gain), ONE)

    @classmethod
    def first_order(cls, pole: float, dc_gain: float = 1.0) -> RationalTransferFunction:
        """dc_gain · pole / (s + pole)."""
        return cls(Polynomial(dc_gain * pole), Polynomial((pole, 1.0)))

    # ── algebra ────────────────────────────────────────────────────────
    def __mul__(self, other: RationalTransferFunction | Polynomial | float) -> RationalTransferFunction:
        if isinstance(other, RationalTransferFunction):
            return RationalTransferFunction(self.numerator * other.numerator,
                                            self.denominator * other.denominator)
        return RationalTransferFunction(self.numerator * other, self.denominator)

    __rmul__ = __mul__

    def __add__(self, other: RationalTransferFunction) -> RationalTransferFunction:
        if self.denominator == other.denominator:
            return RationalTransferFunction(self.numerator + other.numerator, self.denominator)
        return RationalTransferFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def integrate(self) -> RationalTransferFunction:
        """G(s)/s."""
        return RationalTransferFunction(self.numerator, self.denominator * S)

    def cancel_origin_factors(self, tolerance: float | None = None) -> RationalTransferFunction:
        """Remove common factors s from numerator and denominator."""
        if tolerance is None:
            tolerance = settings.lti.cancel_tolerance
        if self.numerator.is_zero:
            return RationalTransferFunction(self.numerator, self.denominator.drop_origin_factors(
                self.denominator.origin_multiplicity(tolerance)))
        common = min(self.numerator.origin_multiplicity(tolerance),
                     self.denominator.origin_multiplicity(tolerance))
        if common == 0:
            return self
        return RationalTransferFunction(self.numerator.drop_origin_factors(common),
                                        self.denominator.drop_origin_factors(common))

    def poles(self) -> np.ndarray:
        return self.denominator.roots()

    def __call__(self, s: complex) -> complex:
        return evaluate(self, s)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def _pole_limit(tf: RationalTransferFunction) -> float:
    return settings.lti.pole_tolerance * max(1.0, tf.denominator.scale)


def evaluate(tf: RationalTransferFunction, s: complex) -> complex:
    den = complex(tf.denominator(s))
    if abs(den) < _pole_limit(tf):
        raise PoleHitError(f"evaluation at s={s} hits a pole (|D(s)|={abs(den):.3e})")
    return complex(tf.numerator(s)) / den


def frequency_response(tf: RationalTransferFunction, omegas: np.ndarray) -> np.ndarray:
    """G(jω) over a grid; pole hits come back as NaN instead of raising."""
    s = 1j * np.asarray(omegas, dtype=float)
    den = tf.denominator(s)
    num = tf.numerator(s)
    hit = np.abs(den) < _pole_limit(tf)
    out = np.full(s.shape, np.nan + 1j * np.nan, dtype=complex)
    out[~hit] = num[~hit] / den[~hit]
    return out


def magnitude_db(tf: RationalTransferFunction, omega: float) -> float:
    if omega < 0:
        raise ValueError("omega must be non-negative")
    return 20.0 * float(np.log10(abs(evaluate(tf, 1j * omega))))


def phase_deg(tf: RationalTransferFunction, omegas: np.ndarray) -> np.ndarray:
    """Unwrapped phase in degrees; NaN where the grid hits a pole."""
    response = frequency_response(tf, omegas)
    phase = np.full(response.shape, np.nan)
    ok = np.isfinite(response)
    phase[ok] = np.degrees(np.unwrap(np.angle(response[ok])))
    return phase


# ---------------------------------------------------------------------------
# Bandwidth
# ---------------------------------------------------------------------------

def measure_bandwidth(
    tf: RationalTransferFunction,
    dc_reference: float,
    omega_min: float | None = None,
    omega_max: float | None = None,
) -> float:
    """
    Smallest ω where |G(jω)| drops through dc_reference/√2 from above.

    A log-spaced scan finds the first bracketing pair of grid points,
    then bisection refines the crossing to the configured relative tolerance.
    """
    if dc_reference <= 0:
        raise ValueError("dc_reference must be positive")
    cfg = settings.lti
    lo = cfg.bandwidth_omega_min if omega_min is None else omega_min
    hi = cfg.bandwidth_omega_max if omega_max is None else omega_max
    threshold = dc_reference / np.sqrt(2.0)

    grid = np.logspace(np.log10(lo), np.log10(hi), cfg.bandwidth_scan_points)
    mag = np.abs(frequency_response(tf, grid))
    above = mag >= threshold
    below = mag < threshold
    crossings = np.flatnonzero(above[:-1] & below[1:])
    if crossings.size == 0:
        raise NoCrossingError(
            f"|G(jω)| never falls below {threshold:.6g} on [{lo:g}, {hi:g}] rad/s"
        )
    i = int(crossings[0])
    a, b = float(grid[i]), float(grid[i + 1])
    logger.debug("Bandwidth bracket [%g, %g] rad/s, threshold %g", a, b, threshold)

    def excess(omega: float) -> float:
        return abs(evaluate(tf, 1j * omega)) - threshold

    return float(optimize.bisect(excess, a, b, xtol=1e-15 * a, rtol=cfg.bandwidth_rtol))


# ---------------------------------------------------------------------------
# Steady state
# ---------------------------------------------------------------------------

def is_stable(tf: RationalTransferFunction, margin: float | None = None) -> bool:
    if margin is None:
        margin = settings.lti.stability_margin
    poles = tf.poles()
    return bool(np.all(poles.real < -margin))


def final_value_of_step_response(tf: RationalTransferFunction, step_amplitude: float) -> float:
    """
    Steady-state output for a step of the given amplitude.

    Common factors s are cancelled exactly first; a remaining pole at the
    origin means the response grows without bound.
    """
    reduced = tf.cancel_origin_factors()
    if reduced.numerator.is_zero:
        return 0.0
    if reduced.denominator.origin_multiplicity(settings.lti.cancel_tolerance) > 0:
        raise DivergenceError("a pole at the origin survives cancellation; the final value diverges")
    if not is_stable(reduced):
        raise InstabilityError(
            f"poles {np.round(reduced.poles(), 6).tolist()} are not all in the open left half-plane"
        )
    dc_gain = reduced.numerator.coefficients[0] / reduced.denominator.coefficients[0]
    return dc_gain * step_amplitude
