"""
vsmsim/model/profiles.py
────────────────────────
The built-in `table1` parameter set of the tested system
(320 kVA / 600 V base, 60 Hz, one SG and one ESS-based VSM).
"""

from __future__ import annotations

from vsmsim.model.params import EssParams, SgParams, VsmParams

REFERENCE_BASE_FREQUENCY_HZ = 60.0

REFERENCE_SG = SgParams(
    h_sg=2.5,
    d_sg=0.0,
    kp_sg=15.0,
    ki_sg=5.0,
    t_sg=0.3,
)

REFERENCE_VSM = VsmParams(
    h_vsm=5.0,
    d_vsm=10.0,
    kp_vsm=15.0,
    t_vsm=0.3,
)

REFERENCE_ESS = EssParams(
    e_nom=6.8,
    soc_ref=0.5,
    soc_ini=0.5,
    kp_e=0.4,
    ki_e=0.002,
    p_rating=1.0,
)

# step-load experiment
REFERENCE_STEP_TIME_S    = 10.0
REFERENCE_DELTA_P_L_PU   = 0.375
REFERENCE_DURATION_S     = 400.0
