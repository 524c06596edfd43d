from vsmsim.model.params import EssParams, SgParams, VsmParams
from vsmsim.model.system import (
    SystemModel,
    build_system,
    closed_secondary_characteristic,
    primary_corner,
    secondary_corner,
    soc_corner,
    simplified_primary_model,
    simplified_secondary_model,
    simplified_soc_model,
    soc_pi_model,
)

__all__ = [
    "EssParams", "SgParams", "VsmParams", "SystemModel", "build_system",
    "closed_secondary_characteristic", "primary_corner", "secondary_corner", "soc_corner",
    "simplified_primary_model", "simplified_secondary_model", "simplified_soc_model",
    "soc_pi_model",
]
