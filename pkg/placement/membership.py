"""Recognize members of the orthogonal placement set and recover their parameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from channel.geometry import EnvConstants, GroundArray, SwarmState
from core import constants

from .assignment import solve_assignment
from .optimal_set import PlacementParams


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    recovered: Optional[PlacementParams] = None
    max_mismatch: float = float("inf")


def _wrap_unit(values: np.ndarray) -> np.ndarray:
    """Reduce to [−½, ½)."""

    return values - np.floor(values + 0.5)


def _common_shift(lattice_coords: np.ndarray, n_slots: int) -> float:
    """Shift shared by all UAVs, modulo one slot pitch, by circular averaging."""

    phasor = np.mean(np.exp(2j * np.pi * n_slots * lattice_coords))
    if abs(phasor) < 1e-12:
        return 0.0
    shift = float(np.angle(phasor) / (2 * np.pi * n_slots))
    # canonical representative in [−1/(2 n_slots), 1/(2 n_slots))
    return float(_wrap_unit(np.array([shift * n_slots]))[0] / n_slots)


def membership_test(
    swarm: SwarmState,
    env: EnvConstants,
    gs: GroundArray,
    tol: float = constants.DEFAULT_MEMBERSHIP_TOL,
) -> MembershipReport:
    """Decide whether the swarm lies on a shifted, jumped, permuted orthogonal lattice.

    The common shift is only identifiable modulo one slot pitch (1/M_x, 1/M_z),
    since moving it by a pitch merely relabels slots. The recovered shift is the
    representative of smallest magnitude. ``tol`` is measured in lattice units
    (fractions of S_x * eps_n and S_z * eps_n).
    """

    if swarm.n_uavs == 0 or swarm.n_uavs > gs.n_antennas or np.any(swarm.y <= 0):
        return MembershipReport(member=False)

    eps = env.eps(swarm)
    u = swarm.x / (env.s_x * eps)
    v = swarm.z / (env.s_z * eps)
    delta_x = _common_shift(u, gs.m_x)
    delta_z = _common_shift(v, gs.m_z)

    i_m, j_m = gs.grid_indices
    mismatch_x = np.abs(_wrap_unit(u[:, None] - delta_x - i_m[None, :] / gs.m_x))
    mismatch_z = np.abs(_wrap_unit(v[:, None] - delta_z - j_m[None, :] / gs.m_z))
    cost = mismatch_x + mismatch_z
    slots = solve_assignment(cost, exhaustive_limit=constants.EXHAUSTIVE_ASSIGNMENT_LIMIT)

    rows = np.arange(swarm.n_uavs)
    worst = float(np.max(np.maximum(mismatch_x[rows, slots], mismatch_z[rows, slots])))
    if worst > tol:
        return MembershipReport(member=False, max_mismatch=worst)

    i_u, j_u = i_m[slots], j_m[slots]
    f = np.rint(u - delta_x - i_u / gs.m_x).astype(int)
    g = np.rint(v - delta_z - j_u / gs.m_z).astype(int)
    recovered = PlacementParams(
        grid_index=np.column_stack([i_u, j_u]),
        jumps=np.column_stack([f, g]),
        shifts=(delta_x, delta_z),
        eps=eps,
    )
    return MembershipReport(member=True, recovered=recovered, max_mismatch=worst)
