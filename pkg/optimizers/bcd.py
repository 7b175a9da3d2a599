"""Block coordinate descent for the minimal-travel repositioning problem."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from channel.geometry import EnvConstants, GroundArray, SwarmState, far_field_report
from core import constants
from core.exceptions import OptimizationError
from placement.assignment import solve_assignment
from utils.logger import get_logger

from .relaxation import RelaxedInstance, build_relaxed_instance, nearest_jumps, residuals
from .shift_solver import settled_shift_step

LOGGER = get_logger(__name__)


@dataclass(frozen=True)
class OptimizedPlacement:
    """Solution of the relaxed problem; slots[n] is the lattice slot of UAV n."""

    slots: np.ndarray
    delta: tuple[float, float]
    jumps: np.ndarray  # N x 2, entries in {−1, 0}
    final_positions: SwarmState
    objective: float
    per_uav_travel: np.ndarray
    iterations: int
    objective_history: List[float] = field(default_factory=list)
    position_history: List[SwarmState] = field(default_factory=list)
    converged: bool = False


def assignment_step(instance: RelaxedInstance, delta: tuple[float, float]) -> np.ndarray:
    """Exact slot assignment for a fixed shift, each pair using its nearest jump."""

    n_slots, n_uavs = instance.tilde_x.shape
    if n_uavs > n_slots:
        raise OptimizationError(f"{n_uavs} UAVs exceed the {n_slots} lattice slots")
    period_x = instance.period_x[None, :]
    period_z = instance.period_z[None, :]
    move_x = instance.tilde_x + (nearest_jumps(instance.tilde_x, delta[0], period_x) + delta[0]) * period_x
    move_z = instance.tilde_z + (nearest_jumps(instance.tilde_z, delta[1], period_z) + delta[1]) * period_z
    cost = np.hypot(move_x, move_z).T  # UAVs x slots
    return solve_assignment(cost)


def travel_bound_centralized(eps_n: float | np.ndarray, env: EnvConstants) -> float | np.ndarray:
    """Per-UAV travel bound √(S_x² + S_z²)/2 · eps_n."""

    if np.any(np.asarray(eps_n) <= 0):
        raise OptimizationError("range ratio must be positive")
    return np.hypot(env.s_x, env.s_z) / 2.0 * eps_n


def bcd_solve(
    init: SwarmState,
    env: EnvConstants,
    gs: GroundArray,
    tol: float = constants.DEFAULT_BCD_TOL,
    max_iters: int = constants.DEFAULT_BCD_MAX_ITERS,
    far_field_threshold: Optional[float] = None,
) -> OptimizedPlacement:
    """Alternate slot assignment and common-shift optimization from δ = (0, 0).

    Stops when the objective improves by less than ``tol`` meters or after
    ``max_iters`` assignment/shift pairs. Inside one iteration the shift step
    is repeated with refreshed nearest jumps until the jump pattern settles.
    No pass can lengthen the total move, so the objective never increases.
    """

    if max_iters < 1:
        raise OptimizationError("max_iters must be at least 1")
    if init.n_uavs > gs.n_antennas:
        raise OptimizationError(f"{init.n_uavs} UAVs exceed the {gs.n_antennas} lattice slots")
    if far_field_threshold is not None:
        report = far_field_report(init, gs, far_field_threshold)
        if not report.ok:
            LOGGER.warning(
                "Initial swarm violates the far-field check (worst ratio %.3f > %.3f)",
                report.worst_ratio,
                far_field_threshold,
            )

    instance = build_relaxed_instance(init, env, gs)
    delta = (0.0, 0.0)
    slots = np.arange(init.n_uavs)
    history: List[float] = []
    snapshots: List[SwarmState] = []
    previous = float("inf")
    converged = False

    for iteration in range(1, max_iters + 1):
        slots = assignment_step(instance, delta)
        shift = settled_shift_step(instance, slots, delta)
        delta = (shift.delta_x, shift.delta_z)
        move_x, move_z, _ = residuals(instance, slots, delta)
        objective = float(np.sum(np.hypot(move_x, move_z)))
        history.append(objective)
        snapshots.append(init.translated(np.column_stack([move_x, np.zeros(init.n_uavs), move_z])))
        LOGGER.debug("BCD iteration %d: objective %.6f m, delta (%.6f, %.6f)", iteration, objective, *delta)
        if previous - objective < tol or objective < tol:
            converged = True
            break
        previous = objective

    move_x, move_z, jumps = residuals(instance, slots, delta)
    final = init.translated(np.column_stack([move_x, np.zeros(init.n_uavs), move_z]))
    travel = np.hypot(move_x, move_z)
    LOGGER.info(
        "BCD finished after %d iteration(s): total travel %.3f m (converged=%s)",
        len(history),
        float(travel.sum()),
        converged,
    )
    return OptimizedPlacement(
        slots=slots,
        delta=delta,
        jumps=jumps,
        final_positions=final,
        objective=float(travel.sum()),
        per_uav_travel=travel,
        iterations=len(history),
        objective_history=history,
        position_history=snapshots,
        converged=converged,
    )
