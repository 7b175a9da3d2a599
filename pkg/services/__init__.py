"""Service layer exports."""

from .monte_carlo_service import monte_carlo, parameter_sweep, run_trials
from .report_service import emit_report, render_report
from .scenario_service import build_scenario, load_preset, resolve_config
from .trial_service import run_trial

__all__ = [
    "build_scenario",
    "emit_report",
    "load_preset",
    "monte_carlo",
    "parameter_sweep",
    "render_report",
    "resolve_config",
    "run_trial",
    "run_trials",
]
