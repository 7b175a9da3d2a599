"""Formation initialization: grid indices and neighbor links from phase order."""

from __future__ import annotations

from typing import List, Optional

import numpy as np

from channel.geometry import GroundArray
from channel.los import ChannelMatrix
from channel.phases import phase_differences, wrap_phase
from core.exceptions import FormationError

from .agent import FFAgent, phase_targets


def sub_grid_shape(n_uavs: int, gs: GroundArray) -> tuple[int, int]:
    """Most square M_x' x M_z' grid holding exactly n_uavs inside the array."""

    if n_uavs == gs.n_antennas:
        return gs.m_x, gs.m_z
    shapes = [
        (rows, n_uavs // rows)
        for rows in range(1, gs.m_x + 1)
        if n_uavs % rows == 0 and n_uavs // rows <= gs.m_z
    ]
    if not shapes:
        raise FormationError(
            f"{n_uavs} UAVs cannot fill a sub-grid of the {gs.m_x}x{gs.m_z} array"
        )
    return min(shapes, key=lambda shape: (abs(shape[0] - shape[1]), -shape[0]))


def sort_keys(dphi_x: np.ndarray, dphi_z: np.ndarray, gs: GroundArray) -> tuple[np.ndarray, np.ndarray]:
    """Phase keys cut half a slot below zero, so a lattice keeps its physical order."""

    key_x = wrap_phase(dphi_x + np.pi / gs.m_x)
    key_z = wrap_phase(dphi_z + np.pi / gs.m_z)
    return key_x, key_z


def assign_grid(
    key_x: np.ndarray, key_z: np.ndarray, grid_shape: tuple[int, int]
) -> dict[int, tuple[int, int]]:
    rows, cols = grid_shape
    if len(key_x) != rows * cols:
        raise FormationError(f"{len(key_x)} UAVs do not fill a {rows}x{cols} grid")
    by_x = np.argsort(key_x, kind="stable")
    grid: dict[int, tuple[int, int]] = {}
    for i_u in range(rows):
        group = by_x[i_u * cols:(i_u + 1) * cols]
        group = group[np.argsort(key_z[group], kind="stable")]
        for j_u, uav in enumerate(group):
            grid[int(uav)] = (i_u, j_u)
    return grid


def _link(grid_index: tuple[int, int], by_slot: dict[tuple[int, int], int], gs: GroundArray) -> tuple[Optional[int], Optional[int]]:
    i_u, j_u = grid_index
    x_neighbor: Optional[int] = None
    z_neighbor: Optional[int] = None
    if gs.m_x > 1:
        if i_u > 0:
            x_neighbor = by_slot[(i_u - 1, j_u)]
        elif j_u > 0:
            x_neighbor = by_slot[(0, j_u - 1)]
    if gs.m_z > 1:
        if j_u > 0:
            z_neighbor = by_slot[(i_u, j_u - 1)]
        elif i_u > 0:
            z_neighbor = by_slot[(i_u - 1, 0)]
    return x_neighbor, z_neighbor


def build_agents(
    grid: dict[int, tuple[int, int]], gs: GroundArray, positions: np.ndarray
) -> List[FFAgent]:
    by_slot = {index: uav for uav, index in grid.items()}
    agents = []
    for uav in sorted(grid):
        x_neighbor, z_neighbor = _link(grid[uav], by_slot, gs)
        agents.append(
            FFAgent(
                uav_index=uav,
                grid_index=grid[uav],
                x_neighbor=x_neighbor,
                z_neighbor=z_neighbor,
                target=phase_targets(gs, grid[uav]),
                position=np.array(positions[uav], dtype=float),
            )
        )
    return agents


def init_formation(
    h_est: ChannelMatrix,
    gs: GroundArray,
    positions: Optional[np.ndarray] = None,
    grid_shape: Optional[tuple[int, int]] = None,
) -> List[FFAgent]:
    """Sort UAVs by x phase, split into rows, sort rows by z phase, wire neighbors.

    Every agent links toward the lower index along each axis; agents on the
    first line of an axis link across to the previous line with a zero target.
    """

    dphi_x, dphi_z = phase_differences(h_est, gs)
    return formation_from_phases(dphi_x, dphi_z, gs, positions, grid_shape)


def formation_from_phases(
    dphi_x: np.ndarray,
    dphi_z: np.ndarray,
    gs: GroundArray,
    positions: Optional[np.ndarray] = None,
    grid_shape: Optional[tuple[int, int]] = None,
) -> List[FFAgent]:
    n_uavs = len(dphi_x)
    shape = grid_shape or sub_grid_shape(n_uavs, gs)
    if shape[0] > gs.m_x or shape[1] > gs.m_z:
        raise FormationError(f"grid {shape} does not fit the {gs.m_x}x{gs.m_z} array")
    key_x, key_z = sort_keys(dphi_x, dphi_z, gs)
    grid = assign_grid(key_x, key_z, shape)
    if positions is None:
        positions = np.zeros((n_uavs, 3))
    return build_agents(grid, gs, np.asarray(positions, dtype=float))
