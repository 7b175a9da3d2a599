"""Centralized minimal-travel solver (relaxation + block coordinate descent)."""

from .bcd import OptimizedPlacement, assignment_step, bcd_solve, travel_bound_centralized
from .relaxation import (
    RelaxedInstance,
    build_relaxed_instance,
    nearest_jump,
    nearest_jumps,
    residuals,
    travel_objective,
)
from .shift_solver import (
    NormSumObjective,
    ShiftResult,
    minimize_norm_sum,
    nearest_jump_travel,
    settled_shift_step,
    shift_step,
)

__all__ = [
    "NormSumObjective",
    "OptimizedPlacement",
    "RelaxedInstance",
    "ShiftResult",
    "assignment_step",
    "bcd_solve",
    "build_relaxed_instance",
    "minimize_norm_sum",
    "nearest_jump",
    "nearest_jump_travel",
    "nearest_jumps",
    "residuals",
    "settled_shift_step",
    "shift_step",
    "travel_bound_centralized",
    "travel_objective",
]
