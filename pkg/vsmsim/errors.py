"""
vsmsim/errors.py
────────────────
Exception hierarchy.  Every error the library raises on purpose derives
from VsmSimError and carries the CLI exit code it maps to, so the
dispatcher in vsmsim/cli/commands.py needs a single except clause.

    2  configuration / parameter problems
    3  integration blow-up
    4  steady state undefined (divergent or unstable)
    5  degenerate model or unmeasurable bandwidth
"""

from __future__ import annotations


class VsmSimError(Exception):
    """
    Subclasses hand their raw constructor arguments to Exception so that
    args rebuild them; sweep workers send errors back across processes.
    """
    exit_code: int = 1


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------

class ConfigError(VsmSimError):
    exit_code = 2

    def __init__(self, message: str, key: str | None = None, line: int | None = None):
        super().__init__(message, key, line)
        self.message = message
        self.key = key
        self.line = line

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.key is not None:
            where.append(f"key '{self.key}'")
        return f"{self.message} ({', '.join(where)})" if where else self.message


class InvalidParameterError(VsmSimError):
    exit_code = 2

    def __init__(self, field: str, message: str):
        super().__init__(field, message)
        self.field = field
        self.message = message

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------

class IntegrationError(VsmSimError):
    exit_code = 3

    def __init__(self, t: float, message: str = "non-finite state"):
        super().__init__(t, message)
        self.t = t
        self.message = message

    def __str__(self) -> str:
        return f"{self.message} at t={self.t:.6g} s"


# ---------------------------------------------------------------------------
# Steady-state evaluation
# ---------------------------------------------------------------------------

class DivergenceError(VsmSimError):
    exit_code = 4


class InstabilityError(VsmSimError):
    exit_code = 4


# ---------------------------------------------------------------------------
# Models / frequency response
# ---------------------------------------------------------------------------

class DegenerateModelError(VsmSimError):
    exit_code = 5

    def __init__(self, loop: str, message: str):
        super().__init__(loop, message)
        self.loop = loop
        self.message = message

    def __str__(self) -> str:
        return f"{self.loop} loop: {self.message}"


class NoCrossingError(VsmSimError):
    exit_code = 5


class PoleHitError(VsmSimError):
    exit_code = 5
