"""CLI handlers bridging parsed arguments and services."""

from __future__ import annotations

import sys
from argparse import Namespace
from typing import Optional

from core.models import ScenarioConfig
from services.monte_carlo_service import monte_carlo, parameter_sweep
from services.report_service import Report, emit_report, render_report
from services.scenario_service import resolve_config
from services.trial_service import run_trial
from utils.logger import get_logger

from .validators import validate_output, validate_seed, validate_sweep, validate_trials

logger = get_logger(__name__)


def _load(args: Namespace, method: Optional[str] = None) -> ScenarioConfig:
    cfg = resolve_config(args.config)
    updates = {}
    if method is not None:
        updates["method"] = method
    seed = validate_seed(getattr(args, "seed", None))
    trials = validate_trials(getattr(args, "trials", None))
    if trials is not None:
        base = seed if seed is not None else 0
        updates["seeds"] = list(range(base, base + trials))
    elif seed is not None:
        updates["seeds"] = [seed]
    return cfg.model_copy(update=updates) if updates else cfg


def _deliver(report: Report, args: Namespace) -> int:
    output = validate_output(args.format, args.out)
    if output["out"] is None:
        sys.stdout.write(render_report(report, output["format"]))
        if output["format"] == "json":
            sys.stdout.write("\n")
    else:
        emit_report(report, output["format"], output["out"])
    return 0


def _single_trial(args: Namespace, method: str) -> int:
    cfg = _load(args, method)
    report = run_trial(cfg, cfg.seeds[0])
    return _deliver(report, args)


def handle_centralized(args: Namespace) -> int:
    """Run the block coordinate descent placement on one seed."""

    return _single_trial(args, "centralized")


def handle_force_field(args: Namespace) -> int:
    """Run the distributed Force Field protocol on one seed."""

    return _single_trial(args, "force_field")


def handle_baseline(args: Namespace) -> int:
    """Evaluate the initial placement or the URA baseline on one seed."""

    return _single_trial(args, args.method)


def handle_montecarlo(args: Namespace) -> int:
    cfg = _load(args, args.method)
    aggregate = monte_carlo(cfg, workers=args.workers)
    if aggregate.n_failed:
        logger.warning("%d of %d trial(s) failed", aggregate.n_failed, aggregate.n_trials)
    return _deliver(aggregate, args)


def handle_sweep(args: Namespace) -> int:
    sweep = validate_sweep(args.parameter, args.values)
    cfg = _load(args, args.method)
    points = parameter_sweep(cfg, sweep["parameter"], sweep["values"], workers=args.workers)
    return _deliver(points, args)
