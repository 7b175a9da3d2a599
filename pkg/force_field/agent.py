"""Per-UAV Force Field controller state and update rules."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from channel.geometry import GroundArray
from channel.phases import TWO_PI, wrap_phase, wrap_symmetric

Axis = Literal["x", "z"]


def phase_targets(gs: GroundArray, grid_index: tuple[int, int]) -> tuple[float, float]:
    """Target states (ψ^x, ψ^z); first lines along each axis aim for zero.

    Targets always use the dimensions of the full ground array, also when the
    swarm only occupies a sub-grid.
    """

    i_u, j_u = grid_index
    psi_x = 0.0 if i_u == 0 else TWO_PI / gs.m_x
    psi_z = 0.0 if j_u == 0 else TWO_PI / gs.m_z
    return psi_x, psi_z


def measure_state(own_dphi: float, neighbor_dphi: float) -> float:
    """(own − neighbor) reduced to [0, 2π)."""

    return float(wrap_phase(own_dphi - neighbor_dphi))


def unwrap_state(measured: float, prev_unwrapped: float, prev_measured: float) -> float:
    """Continue the unwrapped state across a 2π wrap of the measurement."""

    corrections = (0.0, TWO_PI, -TWO_PI)
    correction = min(corrections, key=lambda c: abs(measured + c - prev_measured))
    return measured + correction + TWO_PI * math.floor(prev_unwrapped / TWO_PI)


@dataclass
class FFAgent:
    """Controller of one UAV; talks only to its x and z neighbors."""

    uav_index: int
    grid_index: tuple[int, int]
    x_neighbor: Optional[int]
    z_neighbor: Optional[int]
    target: tuple[float, float]
    position: np.ndarray
    unwrapped_state: list[Optional[float]] = field(default_factory=lambda: [None, None])
    prev_measured: list[Optional[float]] = field(default_factory=lambda: [None, None])
    own_dphi: tuple[float, float] = (0.0, 0.0)

    @property
    def is_anchor(self) -> bool:
        return self.grid_index == (0, 0)

    def neighbor(self, axis: Axis) -> Optional[int]:
        return self.x_neighbor if axis == "x" else self.z_neighbor

    def observe(
        self,
        own_dphi: tuple[float, float],
        x_neighbor_dphi: Optional[float],
        z_neighbor_dphi: Optional[float],
    ) -> None:
        """Update both axis states from the own phases and the neighbors' shared ones."""

        self.own_dphi = own_dphi
        for slot, neighbor_dphi in ((0, x_neighbor_dphi), (1, z_neighbor_dphi)):
            if neighbor_dphi is None:
                continue
            measured = measure_state(own_dphi[slot], neighbor_dphi)
            if self.unwrapped_state[slot] is None:
                # zero targets start from the representative nearest zero
                initial = float(wrap_symmetric(measured)) if self.target[slot] == 0.0 else measured
                self.unwrapped_state[slot] = initial
            else:
                self.unwrapped_state[slot] = unwrap_state(
                    measured, self.unwrapped_state[slot], self.prev_measured[slot]
                )
            self.prev_measured[slot] = measured

    def error(self, axis: Axis) -> float:
        slot = 0 if axis == "x" else 1
        state = self.unwrapped_state[slot]
        if self.neighbor(axis) is None or state is None:
            return 0.0
        return state - self.target[slot]


def controller_step(agent: FFAgent, axis: Axis, k_p: float) -> float:
    """Proportional move −k_p · e along one axis; the anchor never moves."""

    if agent.is_anchor or agent.neighbor(axis) is None:
        return 0.0
    return -k_p * agent.error(axis)
