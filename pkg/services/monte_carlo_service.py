"""Monte-Carlo runner and parameter sweeps over independent seeded trials."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from config import get_settings
from core.exceptions import ConfigurationError, SimulationError
from core.models import MonteCarloAggregate, ScenarioConfig, SweepPoint, TrialReport
from utils.logger import get_logger

from .trial_service import run_trial


LOGGER = get_logger(__name__)

AGGREGATED_METRICS = (
    "final_sum_rate",
    "final_capacity",
    "final_bound",
    "final_gram_residual",
    "mean_travel",
    "max_travel",
    "total_travel",
    "iterations",
    "converged",
)

# (M_x, M_z) of the fixed-aperture massive-MIMO recipe, closest to M_x/M_z = 2
MASSIVE_MIMO_SHAPES: Dict[int, Tuple[int, int]] = {
    16: (4, 4),
    32: (8, 4),
    64: (8, 8),
    128: (16, 8),
}


def _run_one(cfg: ScenarioConfig, seed: int) -> Tuple[int, Optional[TrialReport], Optional[str]]:
    try:
        return seed, run_trial(cfg, seed), None
    except SimulationError as exc:
        LOGGER.warning("Trial seed=%d failed: %s", seed, exc)
        return seed, None, f"{type(exc).__name__}: {exc}"


def run_trials(cfg: ScenarioConfig, workers: Optional[int] = None) -> Tuple[List[TrialReport], List[Dict[str, str]]]:
    """Run every seed of ``cfg``; failed trials are collected instead of raised."""

    if not cfg.seeds:
        raise ConfigurationError("monte_carlo needs at least one seed")
    workers = get_settings().workers if workers is None else workers
    if workers < 1:
        raise ConfigurationError("workers must be at least 1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda seed: _run_one(cfg, seed), cfg.seeds))
    else:
        outcomes = [_run_one(cfg, seed) for seed in cfg.seeds]

    reports = [report for _, report, _ in outcomes if report is not None]
    failures = [{"seed": str(seed), "error": error} for seed, _, error in outcomes if error is not None]
    return reports, failures


def summary_frame(reports: Sequence[TrialReport]) -> pd.DataFrame:
    records = [{"seed": report.seed, **report.summary.model_dump()} for report in reports]
    frame = pd.DataFrame.from_records(records, columns=["seed", *AGGREGATED_METRICS, "wall_time_s"])
    return frame.astype({"converged": float, "iterations": float})


def aggregate_reports(
    method: str, reports: Sequence[TrialReport], failures: Sequence[Dict[str, str]] = ()
) -> MonteCarloAggregate:
    """Mean, population std, min and max of every final metric over trials."""

    metrics: Dict[str, Dict[str, float]] = {}
    if reports:
        frame = summary_frame(reports)[list(AGGREGATED_METRICS)]
        stats = frame.agg(["mean", "min", "max"])
        stats.loc["std"] = frame.std(ddof=0)
        metrics = {
            column: {stat: float(stats.at[stat, column]) for stat in ("mean", "std", "min", "max")}
            for column in AGGREGATED_METRICS
        }
    return MonteCarloAggregate(
        method=method,
        n_trials=len(reports) + len(failures),
        n_failed=len(failures),
        metrics=metrics,
        failures=list(failures),
    )


def monte_carlo(cfg: ScenarioConfig, workers: Optional[int] = None) -> MonteCarloAggregate:
    """Run all seeds of ``cfg`` and aggregate their final metrics.

    Args:
        cfg: Scenario configuration with at least one seed
        workers: Thread count; defaults to ``Settings.workers``
    """

    reports, failures = run_trials(cfg, workers)
    aggregate = aggregate_reports(cfg.method, reports, failures)
    LOGGER.info(
        "Monte-Carlo '%s' (%s): %d trial(s), %d failed",
        cfg.name,
        cfg.method,
        aggregate.n_trials,
        aggregate.n_failed,
    )
    return aggregate


def _nested(cfg: ScenarioConfig, block: str, **changes: Any) -> Dict[str, Any]:
    return {block: getattr(cfg, block).model_copy(update=changes)}


def _massive_mimo(cfg: ScenarioConfig, value: float) -> Dict[str, Any]:
    antennas = int(value)
    if antennas not in MASSIVE_MIMO_SHAPES:
        raise ConfigurationError(
            f"no massive-MIMO shape for {antennas} antennas; expected one of {sorted(MASSIVE_MIMO_SHAPES)}"
        )
    m_x, m_z = MASSIVE_MIMO_SHAPES[antennas]
    return _nested(cfg, "ground_array", m_x=m_x, m_z=m_z)


def _full_grid_m_x(cfg: ScenarioConfig, value: float) -> Dict[str, Any]:
    m_x = int(value)
    changes = _nested(cfg, "ground_array", m_x=m_x)
    changes["n_uavs"] = m_x * cfg.ground_array.m_z
    return changes


SWEEPABLE: Dict[str, Callable[[ScenarioConfig, float], Dict[str, Any]]] = {
    "rician_k_db": lambda cfg, value: _nested(cfg, "disturbances", rician_k_db=value),
    "shadowing_sigma_db": lambda cfg, value: _nested(cfg, "disturbances", shadowing_sigma_db=value),
    "motion_sigma": lambda cfg, value: _nested(cfg, "disturbances", motion_sigma=value),
    "roi_distance": lambda cfg, value: {"roi_distance": value},
    "box_side": lambda cfg, value: {"box": (value, value, value)},
    "m_x": _full_grid_m_x,
    "n_antennas": _massive_mimo,
    "kp_scale": lambda cfg, value: _nested(cfg, "ff", kp_scale=value),
}


def sweep_config(cfg: ScenarioConfig, parameter: str, value: float) -> ScenarioConfig:
    """Copy of ``cfg`` with one parameter set; the result is re-validated."""

    if parameter not in SWEEPABLE:
        raise ConfigurationError(
            f"unsupported sweep parameter '{parameter}'; expected one of {', '.join(sorted(SWEEPABLE))}"
        )
    payload = cfg.model_dump()
    for key, block in SWEEPABLE[parameter](cfg, value).items():
        payload[key] = block.model_dump() if hasattr(block, "model_dump") else block
    try:
        return ScenarioConfig.model_validate(payload)
    except ValueError as exc:
        raise ConfigurationError(f"{parameter}={value} gives an invalid scenario: {exc}") from exc


def parameter_sweep(
    cfg: ScenarioConfig, parameter: str, values: Sequence[float], workers: Optional[int] = None
) -> List[SweepPoint]:
    """Monte-Carlo aggregate of ``cfg`` for each value of ``parameter``."""

    points = []
    for value in values:
        point_cfg = sweep_config(cfg, parameter, value)
        LOGGER.info("Sweep %s=%s", parameter, value)
        points.append(SweepPoint(parameter=parameter, value=float(value), aggregate=monte_carlo(point_cfg, workers)))
    return points
