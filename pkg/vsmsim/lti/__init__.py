from vsmsim.lti.polynomial import Polynomial, poly_add, poly_multiply, first_order_lag, S, ONE
from vsmsim.lti.transfer_function import (
    RationalTransferFunction,
    evaluate,
    frequency_response,
    magnitude_db,
    phase_deg,
    measure_bandwidth,
    is_stable,
    final_value_of_step_response,
)

__all__ = [
    "Polynomial", "poly_add", "poly_multiply", "first_order_lag", "S", "ONE",
    "RationalTransferFunction", "evaluate", "frequency_response", "magnitude_db",
    "phase_deg", "measure_bandwidth", "is_stable", "final_value_of_step_response",
]
