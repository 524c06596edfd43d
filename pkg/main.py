#!/usr/bin/env python3
"""
main.py
───────
CLI entry-point for vsmsim.

Usage:
    python main.py simulate                              # built-in table1 profile
    python main.py simulate my_case.json -o out/ --no-recovery
    python main.py cases -o out/                         # SG only / VSM / VSM + recovery
    python main.py energy --set delta_p_l_pu=0.75
    python main.py bandwidth --separation-factor 2 --third-control-bw 0.01
    python main.py bode --which soc --omega-range 1e-3:1 --points 400 -o out/
    python main.py sweep --param kp_e_pu --values 0.1,0.4,1.6 -o sweep/

Reports are printed to stdout as JSON; logs go to stderr.
Exit codes: 0 ok, 2 config error, 3 integration blow-up,
4 divergent steady state, 5 degenerate model.
"""

from __future__ import annotations
import logging
import sys

# ---------------------------------------------------------------------------
# Logging setup (before any package imports that might log at import time)
# ---------------------------------------------------------------------------
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    datefmt="%H:%M:%S",
)

from vsmsim.cli import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
