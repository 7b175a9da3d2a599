"""Relaxed minimal-travel problem: residual offsets and nearest integer jumps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from channel.geometry import EnvConstants, GroundArray, SwarmState
from core.exceptions import OptimizationError


@dataclass(frozen=True)
class RelaxedInstance:
    """Residual offsets of every (slot m, UAV n) pair with y frozen.

    tilde_x[m, n] is the smallest non-negative x move that puts UAV n onto
    slot m of the unshifted lattice, modulo the period S_x * eps_n.
    """

    tilde_x: np.ndarray  # M x N
    tilde_z: np.ndarray  # M x N
    eps: np.ndarray
    env: EnvConstants
    init: SwarmState
    gs: GroundArray

    @property
    def period_x(self) -> np.ndarray:
        return self.env.s_x * self.eps

    @property
    def period_z(self) -> np.ndarray:
        return self.env.s_z * self.eps


def _frac(values: np.ndarray) -> np.ndarray:
    frac = values - np.floor(values)
    return np.where(frac >= 1.0, 0.0, frac)


def build_relaxed_instance(init: SwarmState, env: EnvConstants, gs: GroundArray) -> RelaxedInstance:
    if init.n_uavs > gs.n_antennas:
        raise OptimizationError(f"{init.n_uavs} UAVs exceed the {gs.n_antennas} lattice slots")
    eps = env.eps(init)
    if np.any(eps <= 0):
        raise OptimizationError("range ratios must be positive")

    i_m, j_m = gs.grid_indices
    period_x = env.s_x * eps
    period_z = env.s_z * eps
    tilde_x = period_x[None, :] * _frac(i_m[:, None] / gs.m_x - init.x[None, :] / period_x[None, :])
    tilde_z = period_z[None, :] * _frac(j_m[:, None] / gs.m_z - init.z[None, :] / period_z[None, :])
    return RelaxedInstance(tilde_x=tilde_x, tilde_z=tilde_z, eps=eps, env=env, init=init, gs=gs)


def nearest_jump(tilde: float, delta: float, s: float, eps: float) -> int:
    """Integer jump in {−1, 0} minimizing |tilde + f s eps + delta s eps|."""

    period = s * eps
    if period <= 0:
        raise OptimizationError("period s * eps must be positive")
    if not 0.0 <= tilde < period:
        raise OptimizationError(f"tilde={tilde} outside [0, {period})")
    if not -0.5 <= delta <= 0.5:
        raise OptimizationError(f"delta={delta} outside [−½, ½]")
    return 0 if tilde + delta * period < period / 2.0 else -1


def nearest_jumps(tilde: np.ndarray, delta: float, period: np.ndarray) -> np.ndarray:
    """Vectorized nearest_jump; period broadcasts against tilde."""

    return np.where(tilde + delta * period < period / 2.0, 0, -1)


def selected_offsets(instance: RelaxedInstance, slots: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    uavs = np.arange(instance.init.n_uavs)
    return instance.tilde_x[slots, uavs], instance.tilde_z[slots, uavs]


def residuals(
    instance: RelaxedInstance,
    slots: np.ndarray,
    delta: tuple[float, float],
    jumps: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """x and z moves of every UAV for the given slots and shift.

    Jumps default to the nearest ones at ``delta``; returns (x', z', jumps).
    """

    tilde_x, tilde_z = selected_offsets(instance, slots)
    if jumps is None:
        jumps = np.column_stack(
            [
                nearest_jumps(tilde_x, delta[0], instance.period_x),
                nearest_jumps(tilde_z, delta[1], instance.period_z),
            ]
        )
    move_x = tilde_x + (jumps[:, 0] + delta[0]) * instance.period_x
    move_z = tilde_z + (jumps[:, 1] + delta[1]) * instance.period_z
    return move_x, move_z, jumps


def travel_objective(instance: RelaxedInstance, slots: np.ndarray, delta: tuple[float, float]) -> float:
    move_x, move_z, _ = residuals(instance, slots, delta)
    return float(np.sum(np.hypot(move_x, move_z)))
