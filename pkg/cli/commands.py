"""Command table and argument parser factory."""

from __future__ import annotations

import argparse
from typing import NoReturn

from core.constants import SUPPORTED_FORMATS, SUPPORTED_METHODS

from .middleware import EXIT_USER_ERROR, report_error

from .handlers import (
    handle_baseline,
    handle_centralized,
    handle_force_field,
    handle_montecarlo,
    handle_sweep,
)


class JsonArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as a JSON object on stderr."""

    def error(self, message: str) -> NoReturn:
        report_error("UsageError", f"{self.prog}: {message}")
        self.exit(EXIT_USER_ERROR)


def create_parser() -> argparse.ArgumentParser:
    """Create the ``uav-backhaul`` argument parser with one sub-command per verb."""

    parser = JsonArgumentParser(
        prog="uav-backhaul",
        description="UAV swarm LOS MIMO backhaul placement simulator",
    )
    verbs = parser.add_subparsers(dest="command", required=True)

    centralized = verbs.add_parser("centralized", help="block coordinate descent placement")
    _add_common(centralized)
    centralized.set_defaults(handler=handle_centralized)

    force_field = verbs.add_parser("force-field", help="distributed Force Field protocol")
    _add_common(force_field)
    force_field.set_defaults(handler=handle_force_field)

    baseline = verbs.add_parser("baseline", help="initial placement or URA baseline")
    _add_common(baseline)
    baseline.add_argument("--method", choices=("init", "ura"), default="init")
    baseline.set_defaults(handler=handle_baseline)

    montecarlo = verbs.add_parser("montecarlo", help="aggregate final metrics over seeds")
    _add_common(montecarlo)
    _add_batch(montecarlo)
    montecarlo.set_defaults(handler=handle_montecarlo)

    sweep = verbs.add_parser("sweep", help="Monte-Carlo aggregate per parameter value")
    _add_common(sweep)
    _add_batch(sweep)
    sweep.add_argument("--parameter", required=True, help="e.g. rician_k_db, roi_distance, m_x, n_antennas")
    sweep.add_argument("--values", required=True, help="comma-separated values, e.g. 1000,2000,4000")
    sweep.set_defaults(handler=handle_sweep)

    return parser


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", default=None, help="preset name or path to a scenario JSON file")
    parser.add_argument("--seed", type=int, default=None, help="trial seed (first seed of a batch)")
    parser.add_argument("--out", default=None, help="report file; stdout when omitted")
    parser.add_argument("--format", choices=SUPPORTED_FORMATS, default="csv")


def _add_batch(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", choices=SUPPORTED_METHODS, default=None)
    parser.add_argument("--trials", type=int, default=None, help="number of consecutive seeds")
    parser.add_argument("--workers", type=int, default=None, help="trial threads")
