"""Construction of capacity-maximizing placements.

A placement is orthogonal when every UAV sits on the lattice

    x_n = S_x * eps_n * (i_n / M_x + f_n + delta_x)
    z_n = S_z * eps_n * (j_n / M_z + g_n + delta_z)

with distinct slots (i_n, j_n), integer jumps (f_n, g_n) and a common shift
(delta_x, delta_z). Scaling the offsets by eps_n = y_n / R keeps the phase
progression identical for UAVs at different ranges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from channel.geometry import EnvConstants, GroundArray, SwarmState
from core.exceptions import PlacementError


@dataclass(frozen=True)
class PlacementParams:
    """Lattice coordinates of a placement; row n describes UAV n."""

    grid_index: np.ndarray  # N x 2 (i_u, j_u)
    jumps: np.ndarray  # N x 2 (f_n, g_n)
    shifts: tuple[float, float]
    eps: np.ndarray

    def __post_init__(self) -> None:
        grid = np.asarray(self.grid_index, dtype=int).reshape(-1, 2)
        jumps = np.asarray(self.jumps, dtype=int).reshape(-1, 2)
        eps = np.asarray(self.eps, dtype=float).ravel()
        if not (len(grid) == len(jumps) == len(eps)):
            raise PlacementError("grid indices, jumps and eps must have one row per UAV")
        if len({(int(i), int(j)) for i, j in grid}) != len(grid):
            raise PlacementError("grid slots must be distinct")
        if not all(np.isfinite(self.shifts)):
            raise PlacementError("shifts must be finite")
        object.__setattr__(self, "grid_index", grid)
        object.__setattr__(self, "jumps", jumps)
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "shifts", (float(self.shifts[0]), float(self.shifts[1])))


def slot_positions(env: EnvConstants, gs: GroundArray, eps: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """x and z of every grid slot m (unshifted, no jumps) at range ratio eps."""

    i_m, j_m = gs.grid_indices
    return env.s_x * eps * i_m / gs.m_x, env.s_z * eps * j_m / gs.m_z


def construct_placement(
    params: PlacementParams, y_coords: Sequence[float], env: EnvConstants, gs: GroundArray
) -> SwarmState:
    y = np.asarray(y_coords, dtype=float)
    if len(y) != len(params.eps):
        raise PlacementError("one y coordinate per UAV is required")
    i_u, j_u = params.grid_index[:, 0], params.grid_index[:, 1]
    if np.any(i_u < 0) or np.any(i_u >= gs.m_x) or np.any(j_u < 0) or np.any(j_u >= gs.m_z):
        raise PlacementError("grid index outside the array")
    delta_x, delta_z = params.shifts
    x = env.s_x * params.eps * (i_u / gs.m_x + params.jumps[:, 0] + delta_x)
    z = env.s_z * params.eps * (j_u / gs.m_z + params.jumps[:, 1] + delta_z)
    return SwarmState(np.column_stack([x, y, z]))


def orthogonal_grid(env: EnvConstants, gs: GroundArray, y_coords: Sequence[float]) -> SwarmState:
    """Uniform rectangular swarm: UAV n = i_u * M_z + j_u on slot (i_u, j_u)."""

    y = np.asarray(y_coords, dtype=float)
    if len(y) != gs.n_antennas:
        raise PlacementError(f"expected {gs.n_antennas} y coordinates, got {len(y)}")
    if np.any(y <= 0):
        raise PlacementError("y coordinates must be positive")
    i_u, j_u = gs.grid_indices
    x = i_u * env.wavelength * y / (gs.m_x * gs.d_x)
    z = j_u * env.wavelength * y / (gs.m_z * gs.d_z)
    return SwarmState(np.column_stack([x, y, z]))


lemma1_grid = orthogonal_grid


def apply_scaled_shift(swarm: SwarmState, env: EnvConstants, delta_x: float, delta_z: float) -> SwarmState:
    eps = env.eps(swarm)
    offsets = np.column_stack(
        [delta_x * env.s_x * eps, np.zeros(swarm.n_uavs), delta_z * env.s_z * eps]
    )
    return swarm.translated(offsets)


def apply_integer_jumps(
    swarm: SwarmState, env: EnvConstants, f: Sequence[int], g: Sequence[int]
) -> SwarmState:
    f_arr = np.asarray(f)
    g_arr = np.asarray(g)
    if len(f_arr) != swarm.n_uavs or len(g_arr) != swarm.n_uavs:
        raise PlacementError(
            f"jump lists must have {swarm.n_uavs} entries, got {len(f_arr)} and {len(g_arr)}"
        )
    if not (np.all(f_arr == np.round(f_arr)) and np.all(g_arr == np.round(g_arr))):
        raise PlacementError("jumps must be integers")
    eps = env.eps(swarm)
    offsets = np.column_stack(
        [f_arr * env.s_x * eps, np.zeros(swarm.n_uavs), g_arr * env.s_z * eps]
    )
    return swarm.translated(offsets)
