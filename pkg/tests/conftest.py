"""
tests/conftest.py
─────────────────
Shared reference-case fixtures and a scenario factory.
"""

from __future__ import annotations

import numpy as np
import pytest

from vsmsim.model.params import EssParams, SgParams, VsmParams
from vsmsim.model.profiles import REFERENCE_ESS, REFERENCE_SG, REFERENCE_VSM
from vsmsim.sim.state import Scenario


@pytest.fixture
def sg() -> SgParams:
    return REFERENCE_SG


@pytest.fixture
def vsm() -> VsmParams:
    return REFERENCE_VSM


@pytest.fixture
def ess() -> EssParams:
    return REFERENCE_ESS


def make_scenario(**overrides) -> Scenario:
    """Reference step-load scenario with keyword overrides (vsm=None for SG only)."""
    fields = dict(
        sg=REFERENCE_SG,
        vsm=REFERENCE_VSM,
        ess=REFERENCE_ESS,
        recovery_enabled=True,
        step_time=10.0,
        delta_p_l=0.375,
        duration=400.0,
        dt=1e-3,
        base_frequency=60.0,
    )
    fields.update(overrides)
    return Scenario(**fields)


def random_params(rng: np.random.Generator) -> tuple[SgParams, VsmParams, EssParams]:
    sg = SgParams(
        h_sg=rng.uniform(0.5, 10.0),
        d_sg=rng.uniform(0.0, 5.0),
        kp_sg=rng.uniform(0.0, 30.0),
        ki_sg=rng.uniform(0.5, 20.0),
        t_sg=rng.uniform(0.05, 1.0),
    )
    vsm = VsmParams(
        h_vsm=rng.uniform(0.0, 10.0),
        d_vsm=rng.uniform(0.0, 20.0),
        kp_vsm=rng.uniform(0.0, 30.0),
        t_vsm=rng.uniform(0.05, 1.0),
    )
    ess = EssParams(
        e_nom=rng.uniform(1.0, 20.0),
        soc_ref=0.5,
        soc_ini=rng.uniform(0.2, 0.8),
        kp_e=rng.uniform(0.05, 2.0),
        ki_e=rng.uniform(0.0, 0.01),
        p_rating=1.0,
    )
    return sg, vsm, ess
