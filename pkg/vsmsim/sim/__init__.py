from vsmsim.sim.state import Scenario, SimulationMetrics, SimulationResult, SimulationState, SERIES_COLUMNS
from vsmsim.sim.metrics import compute_metrics, settling_time
from vsmsim.sim.simulator import derivative, load_at, run

__all__ = [
    "Scenario", "SimulationMetrics", "SimulationResult", "SimulationState", "SERIES_COLUMNS",
    "compute_metrics", "settling_time", "derivative", "load_at", "run",
]
