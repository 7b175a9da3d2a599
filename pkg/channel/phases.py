"""Per-UAV phase differences across adjacent ground antennas."""

from __future__ import annotations

import numpy as np

from .geometry import GroundArray, SwarmState
from .los import ChannelMatrix

TWO_PI = 2.0 * np.pi


def wrap_phase(values: np.ndarray | float) -> np.ndarray:
    """Reduce to [0, 2π)."""

    wrapped = np.mod(values, TWO_PI)
    # np.mod can return 2π for tiny negative inputs
    return np.where(wrapped >= TWO_PI, 0.0, wrapped)


def wrap_symmetric(values: np.ndarray | float) -> np.ndarray:
    """Reduce to (−π, π]."""

    wrapped = wrap_phase(values)
    return np.where(wrapped > np.pi, wrapped - TWO_PI, wrapped)


def delay_phase(h: ChannelMatrix) -> np.ndarray:
    """Propagation delay phase 2π d/λ mod 2π of every entry (negated entry angle)."""

    return wrap_phase(-np.angle(h.entries))


def phase_differences(h: ChannelMatrix, gs: GroundArray) -> tuple[np.ndarray, np.ndarray]:
    """Δφ^x (antennas (0,0)-(1,0)) and Δφ^z (antennas (0,0)-(0,1)) per UAV.

    An axis with a single antenna has no phase difference; zeros are returned.
    """

    phase = delay_phase(h)
    origin = phase[gs.antenna_index(0, 0)]
    zeros = np.zeros(h.n_uavs)
    dphi_x = wrap_phase(origin - phase[gs.antenna_index(1, 0)]) if gs.m_x > 1 else zeros
    dphi_z = wrap_phase(origin - phase[gs.antenna_index(0, 1)]) if gs.m_z > 1 else zeros
    return dphi_x, dphi_z


def far_field_phase_differences(
    swarm: SwarmState, gs: GroundArray, wavelength: float
) -> tuple[np.ndarray, np.ndarray]:
    """Linearized model: 2π x d_x/(λ y) and 2π z d_z/(λ y), wrapped to [0, 2π)."""

    dphi_x = wrap_phase(TWO_PI * swarm.x * gs.d_x / (wavelength * swarm.y))
    dphi_z = wrap_phase(TWO_PI * swarm.z * gs.d_z / (wavelength * swarm.y))
    if gs.m_x == 1:
        dphi_x = np.zeros(swarm.n_uavs)
    if gs.m_z == 1:
        dphi_z = np.zeros(swarm.n_uavs)
    return dphi_x, dphi_z
