"""
vsmsim/cli/commands.py
──────────────────────
Sub-commands behind `python main.py <command>`.

    simulate   one step-load run        -> timeseries.csv, metrics.json
    cases      SG only / VSM / VSM + recovery side by side
    energy     steady-state ESS energy, closed form vs final value
    bandwidth  loop bandwidths and separation verdict
    bode       magnitude/phase table of one transfer function -> bode.csv
    sweep      one run per value of a config key  -> */metrics.json, sweep_summary.csv

Every command returns an exit status; VsmSimError subclasses carry theirs:
0 ok, 2 config, 3 integration blow-up, 4 divergent steady state, 5 degenerate model.
"""

from __future__ import annotations
import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable

import pandas as pd

from vsmsim.analysis import (
    bandwidth_report,
    energy_report,
    energy_report_via_final_value,
    estimate_bandwidths,
    max_relative_difference,
)
from vsmsim.cli.artifacts import (
    BODE_FILE,
    METRICS_FILE,
    SWEEP_FILE,
    bode_table,
    write_csv,
    write_json,
    write_simulation,
)
from vsmsim.cli.scenario_config import BUILTIN_PROFILE, ScenarioConfig, load_config
from vsmsim.config import settings
from vsmsim.errors import ConfigError, DivergenceError, VsmSimError
from vsmsim.lti import RationalTransferFunction
from vsmsim.model import (
    build_system,
    closed_secondary_characteristic,
    simplified_primary_model,
    simplified_secondary_model,
    simplified_soc_model,
    soc_pi_model,
)
from vsmsim.sim import run

logger = logging.getLogger(__name__)


def _emit(payload: dict[str, Any]) -> None:
    """Reports go to stdout as JSON; logs stay on stderr."""
    print(json.dumps(payload, indent=2))


def _config(args: argparse.Namespace, **forced: Any) -> ScenarioConfig:
    config = load_config(args.config, args.set)
    return config.with_overrides(**forced) if forced else config


# ===========================================================================
# simulate / cases
# ===========================================================================

def cmd_simulate(args: argparse.Namespace) -> int:
    forced: dict[str, Any] = {}
    if args.no_vsm:
        forced["vsm_enabled"] = False
    if args.no_recovery:
        forced["recovery_enabled"] = False
    scenario = _config(args, **forced).to_scenario()
    result = run(scenario, decimation=args.decimation)
    write_simulation(result, Path(args.output_dir))
    _emit(result.metrics.model_dump())
    return 0


CASES = {
    "sg_only":         {"vsm_enabled": False},
    "vsm_no_recovery": {"vsm_enabled": True, "recovery_enabled": False},
    "vsm_recovery":    {"vsm_enabled": True, "recovery_enabled": True},
}


def cmd_cases(args: argparse.Namespace) -> int:
    base = _config(args)
    out_dir = Path(args.output_dir)
    summary: dict[str, Any] = {}
    for name, forced in CASES.items():
        result = run(base.with_overrides(**forced).to_scenario(), decimation=args.decimation)
        write_simulation(result, out_dir / name)
        summary[name] = result.metrics.model_dump()

    try:
        analytic = energy_report(base.sg_params(), base.vsm_params(), base.ess_params(), base.delta_p_l_pu)
        summary["analytic_soc_drop"] = analytic.delta_soc
    except DivergenceError as exc:
        logger.warning("No analytic SoC drop: %s", exc)
        summary["analytic_soc_drop"] = None
    _emit(summary)
    return 0


# ===========================================================================
# energy
# ===========================================================================

def cmd_energy(args: argparse.Namespace) -> int:
    config = _config(args)
    sg, vsm, ess = config.sg_params(), config.vsm_params(), config.ess_params()
    closed = energy_report(sg, vsm, ess, config.delta_p_l_pu)
    model = build_system(sg, vsm, config.base_frequency_hz, ess)
    final = energy_report_via_final_value(model, ess, config.delta_p_l_pu)
    gap = max_relative_difference(closed, final)
    _emit({
        "delta_p_l_pu":            config.delta_p_l_pu,
        "closed_form":             closed.as_output(),
        "final_value":             final.as_output(),
        "agreement":               gap <= settings.analysis.agreement_rtol,
        "max_relative_difference": gap,
    })
    return 0


# ===========================================================================
# bandwidth
# ===========================================================================

def cmd_bandwidth(args: argparse.Namespace) -> int:
    factor = settings.analysis.separation_factor if args.separation_factor is None else args.separation_factor
    if factor < 1:
        raise ConfigError("separation factor must be >= 1", key="--separation-factor")
    config = _config(args)
    report = bandwidth_report(
        config.sg_params(), config.vsm_params(), config.ess_params(),
        separation_factor=factor,
        third_control_bw=args.third_control_bw,
    )
    _emit(report.model_dump(mode="json"))
    return 0


# ===========================================================================
# bode
# ===========================================================================

def _bode_targets(config: ScenarioConfig) -> dict[str, Callable[[], RationalTransferFunction]]:
    sg, vsm, ess = config.sg_params(), config.vsm_params(), config.ess_params()
    model = lambda: build_system(sg, vsm, config.base_frequency_hz, ess)  # noqa: E731
    return {
        "gf":          lambda: model().g_f,
        "gf_integral": lambda: closed_secondary_characteristic(model()),
        "p_sg":        lambda: model().tf_p_sg,
        "p_hd":        lambda: model().tf_p_hd,
        "p_gov":       lambda: model().tf_p_gov,
        "primary":     lambda: simplified_primary_model(sg, vsm),
        "secondary":   lambda: simplified_secondary_model(sg, vsm),
        "soc":         lambda: simplified_soc_model(ess),
        "soc_pi":      lambda: soc_pi_model(ess),
    }


BODE_CHOICES = ("gf", "gf_integral", "p_sg", "p_hd", "p_gov", "primary", "secondary", "soc", "soc_pi")


def _omega_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError as exc:
        raise ConfigError(f"omega range '{text}' is not LO:HI", key="--omega-range") from exc
    if not 0 < lo < hi:
        raise ConfigError(f"omega range must satisfy 0 < lo < hi, got {lo}:{hi}", key="--omega-range")
    return lo, hi


def cmd_bode(args: argparse.Namespace) -> int:
    lo, hi = _omega_range(args.omega_range)
    if args.points < 2:
        raise ConfigError("--points must be at least 2", key="--points")
    config = _config(args)
    tf = _bode_targets(config)[args.which]()
    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(bode_table(tf, lo, hi, args.points), out_dir / BODE_FILE)
    return 0


# ===========================================================================
# sweep
# ===========================================================================

def _sweep_run(config: ScenarioConfig, out_dir: Path, decimation: int | None) -> dict[str, Any]:
    """One sweep point; owns (and is the only writer of) out_dir/metrics.json."""
    result = run(config.to_scenario(), decimation=decimation)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_json(result.metrics.model_dump(), out_dir / METRICS_FILE)
    return result.metrics.model_dump()


def _separation_ok(config: ScenarioConfig) -> bool | None:
    try:
        analytic = estimate_bandwidths(config.sg_params(), config.vsm_params(), config.ess_params())
    except VsmSimError:
        return None
    factor = settings.analysis.separation_factor
    return analytic.primary / analytic.secondary >= factor and analytic.secondary / analytic.soc >= factor


def _parse_values(text: str) -> list[float]:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"values '{text}' are not a comma-separated list of numbers", key="--values") from exc
    if not values:
        raise ConfigError("no values to sweep", key="--values")
    if len(set(values)) != len(values):
        raise ConfigError(f"values '{text}' repeat an entry", key="--values")
    return values


def cmd_sweep(args: argparse.Namespace) -> int:
    field = ScenarioConfig.model_fields.get(args.param)
    if field is None or field.annotation is not float:
        raise ConfigError("unknown numeric configuration key", key=args.param)
    values = _parse_values(args.values)
    base = _config(args)
    out_dir = Path(args.output_dir)
    configs = [base.with_overrides(**{args.param: v}) for v in values]
    dirs = [out_dir / f"{i:02d}_{args.param}={v!r}" for i, v in enumerate(values)]

    baseline_value = getattr(base, args.param)
    need_baseline = baseline_value not in values
    jobs = list(zip(configs, dirs))

    workers = settings.simulator.sweep_workers or os.cpu_count() or 1
    if workers == 1 or len(jobs) == 1:
        metrics = [_sweep_run(c, d, args.decimation) for c, d in jobs]
        baseline = run(base.to_scenario(), decimation=args.decimation).metrics.model_dump() if need_baseline else None
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_run, c, d, args.decimation) for c, d in jobs]
            base_future = pool.submit(run, base.to_scenario(), args.decimation) if need_baseline else None
            metrics = [f.result() for f in futures]
            baseline = base_future.result().metrics.model_dump() if base_future else None

    if baseline is None:
        baseline = metrics[values.index(baseline_value)]

    rows = []
    for value, config, m in zip(values, configs, metrics):
        rows.append({
            "value":                value,
            "nadir_hz":             m["nadir_hz"],
            "soc_settling_time_s":  m["soc_settling_time_s"],
            "nadir_degradation_hz": baseline["nadir_hz"] - m["nadir_hz"],
            "separation_ok":        _separation_ok(config),
        })
    summary = pd.DataFrame(rows, columns=["value", "nadir_hz", "soc_settling_time_s",
                                          "nadir_degradation_hz", "separation_ok"])
    out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(summary, out_dir / SWEEP_FILE)
    _emit({"param": args.param, "baseline_value": baseline_value, "runs": rows})
    return 0


# ===========================================================================
# Argument parsing / dispatch
# ===========================================================================

def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vsmsim",
        description="ESS-based VSM frequency control: simulation, energy and bandwidth analysis",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ... (default from settings)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, output: bool = False) -> None:
        p.add_argument("config", nargs="?", default=BUILTIN_PROFILE,
                       help=f"scenario JSON file, or '{BUILTIN_PROFILE}' (default)")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override one configuration key (repeatable)")
        if output:
            p.add_argument("-o", "--output-dir", default=".", help="directory for output files")

    p = sub.add_parser("simulate", help="run one step-load simulation")
    common(p, output=True)
    p.add_argument("--no-vsm", action="store_true", help="SG alone, ESS idle")
    p.add_argument("--no-recovery", action="store_true", help="disable SoC recovery control")
    p.add_argument("--decimation", type=_positive_int, default=None, help="record every N integration steps")
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("cases", help="SG only, VSM, VSM + recovery")
    common(p, output=True)
    p.add_argument("--decimation", type=_positive_int, default=None)
    p.set_defaults(handler=cmd_cases)

    p = sub.add_parser("energy", help="steady-state ESS energy per service")
    common(p)
    p.set_defaults(handler=cmd_energy)

    p = sub.add_parser("bandwidth", help="loop bandwidths and separation check")
    common(p)
    p.add_argument("--separation-factor", type=float, default=None)
    p.add_argument("--third-control-bw", type=float, default=None, metavar="W",
                   help="tertiary control bandwidth to compare the SoC loop against, rad/s")
    p.set_defaults(handler=cmd_bandwidth)

    p = sub.add_parser("bode", help="Bode table of one transfer function")
    common(p, output=True)
    p.add_argument("--which", choices=BODE_CHOICES, default="gf")
    p.add_argument("--omega-range", default="1e-3:1e2", metavar="LO:HI")
    p.add_argument("--points", type=int, default=200)
    p.set_defaults(handler=cmd_bode)

    p = sub.add_parser("sweep", help="one simulation per value of a config key")
    common(p, output=True)
    p.add_argument("--param", required=True)
    p.add_argument("--values", required=True, help="comma-separated numbers")
    p.add_argument("--decimation", type=_positive_int, default=None)
    p.set_defaults(handler=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.getLogger().setLevel((args.log_level or settings.log_level).upper())
    try:
        return args.handler(args)
    except VsmSimError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
