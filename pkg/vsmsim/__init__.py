"""
vsmsim
──────
Frequency control of a grid-forming energy-storage VSM next to a
synchronous generator: transfer-function model, steady-state energy and
bandwidth analysis, time-domain simulation and a CLI around them.
"""

__version__ = "1.0.0"
