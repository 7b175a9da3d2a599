"""Distributed Force Field repositioning protocol."""

from .agent import FFAgent, controller_step, measure_state, phase_targets, unwrap_state
from .formation import formation_from_phases, init_formation, sort_keys, sub_grid_shape
from .simulation import (
    CONVERGENCE_ERROR,
    FFTrajectory,
    kp_guarantee_bound,
    resolve_gain,
    run_force_field,
    travel_bound_ff,
)

__all__ = [
    "CONVERGENCE_ERROR",
    "FFAgent",
    "FFTrajectory",
    "controller_step",
    "formation_from_phases",
    "init_formation",
    "kp_guarantee_bound",
    "measure_state",
    "phase_targets",
    "resolve_gain",
    "run_force_field",
    "sort_keys",
    "sub_grid_shape",
    "travel_bound_ff",
    "unwrap_state",
]
