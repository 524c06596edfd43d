"""
vsmsim/lti/polynomial.py
────────────────────────
Real polynomials in the Laplace variable s.

Coefficients are stored in ASCENDING powers of s, so index 0 is the value
at s=0 and a factor s shows up as a leading run of zeros:

    (3, 2)        ->  3 + 2 s
    (0, 1, 0.3)   ->  s (1 + 0.3 s)

The canonical form drops trailing (highest-order) exact zeros; the zero
polynomial is (0.0,).  numpy.polynomial.polynomial works in the same
ascending convention, so all arithmetic is delegated to it.
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as P


def _canonical(coefficients: Iterable[float]) -> tuple[float, ...]:
    c = [float(x) for x in coefficients]
    while len(c) > 1 and c[-1] == 0.0:
        c.pop()
    return tuple(c) if c else (0.0,)


@dataclass(frozen=True)
class Polynomial:
    coefficients: tuple[float, ...]

    def __init__(self, coefficients: Sequence[float] | float = (0.0,)):
        if np.isscalar(coefficients):
            coefficients = (coefficients,)
        object.__setattr__(self, "coefficients", _canonical(coefficients))

    # ── structure ──────────────────────────────────────────────────────
    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0.0,)

    @property
    def scale(self) -> float:
        """Largest coefficient magnitude."""
        return max(abs(c) for c in self.coefficients)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=float)

    def origin_multiplicity(self, tolerance: float = 0.0) -> int:
        """Number of leading factors s, i.e. low-order coefficients below tolerance·scale."""
        if self.is_zero:
            return 0
        limit = tolerance * self.scale
        k = 0
        while k < self.degree and abs(self.coefficients[k]) <= limit:
            k += 1
        return k

    def drop_origin_factors(self, count: int) -> Polynomial:
        """Divide by s**count (the caller has established those factors exist)."""
        return Polynomial(self.coefficients[count:])

    # ── evaluation ─────────────────────────────────────────────────────
    def __call__(self, s: complex | np.ndarray) -> complex | np.ndarray:
        # polyval uses Horner's scheme on ascending coefficients
        return P.polyval(s, self.coefficients)

    def roots(self) -> np.ndarray:
        """Roots via companion-matrix eigenvalues."""
        if self.degree < 1:
            return np.empty(0, dtype=complex)
        return P.polyroots(self.coefficients)

    # ── arithmetic ─────────────────────────────────────────────────────
    def __mul__(self, other: Polynomial | float) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial(other)
        return poly_multiply(self, other)

    __rmul__ = __mul__

    def __add__(self, other: Polynomial | float) -> Polynomial:
        if not isinstance(other, Polynomial):
            other = Polynomial(other)
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coefficients])

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)})"


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def poly_multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    """Convolution of the coefficient sequences."""
    return Polynomial(P.polymul(a.coefficients, b.coefficients))


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return Polynomial(P.polyadd(a.coefficients, b.coefficients))


# Frequently used building blocks
S = Polynomial((0.0, 1.0))
ONE = Polynomial((1.0,))


def first_order_lag(time_constant: float) -> Polynomial:
    """T s + 1."""
    return Polynomial((1.0, time_constant))
