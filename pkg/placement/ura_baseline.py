"""Conventional URA placement used as a travel baseline."""

from __future__ import annotations

import numpy as np

from channel.geometry import EnvConstants, GroundArray, SwarmState
from core.exceptions import PlacementError
from utils.logger import get_logger

from .assignment import solve_assignment
from .optimal_set import slot_positions

LOGGER = get_logger(__name__)


def ura_baseline(init: SwarmState, env: EnvConstants, gs: GroundArray) -> SwarmState:
    """Fly every UAV to a common range and onto an unscaled lattice centred on the swarm.

    All UAVs end at y = mean(initial y); the slot grid uses the spacing of a
    range ratio eps = y / R and its centroid matches the initial x-z centroid.
    UAVs take the N nearest slots through the shared assignment solver.
    """

    if init.n_uavs > gs.n_antennas:
        raise PlacementError(f"{init.n_uavs} UAVs exceed the {gs.n_antennas} lattice slots")

    common_y = float(np.mean(init.y))
    eps = common_y / env.range_r
    slot_x, slot_z = slot_positions(env, gs, eps)
    slot_x = slot_x - slot_x.mean() + float(np.mean(init.x))
    slot_z = slot_z - slot_z.mean() + float(np.mean(init.z))
    slots = np.column_stack([slot_x, np.full(gs.n_antennas, common_y), slot_z])

    cost = np.linalg.norm(init.positions[:, None, :] - slots[None, :, :], axis=2)
    assignment = solve_assignment(cost)
    LOGGER.debug("URA baseline assigned %d UAVs, total travel %.3f m", init.n_uavs, cost[np.arange(init.n_uavs), assignment].sum())
    return SwarmState(slots[assignment])
