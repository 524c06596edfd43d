from vsmsim.analysis.reports import BandwidthEstimate, BandwidthReport, EnergyReport
from vsmsim.analysis.energy import energy_report, energy_report_via_final_value, max_relative_difference
from vsmsim.analysis.bandwidth import bandwidth_report, estimate_bandwidths

__all__ = [
    "BandwidthEstimate", "BandwidthReport", "EnergyReport",
    "energy_report", "energy_report_via_final_value", "max_relative_difference",
    "bandwidth_report", "estimate_bandwidths",
]
