"""Ground array and swarm geometry in the ground-station frame.

The GS frame puts antenna 0 at the origin, the array in the x-z plane and the
boresight along +y. Scenario (world) coordinates are rotated into this frame
by the array elevation tilt about the x-axis before any channel math.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from core.exceptions import GeometryError
from core.models import GroundArrayConfig


@dataclass(frozen=True)
class GroundArray:
    """M_x x M_z uniform rectangular array; antenna m = i_m * m_z + j_m."""

    m_x: int
    m_z: int
    d_x: float
    d_z: float
    elevation_tilt: float = 0.0
    base_height: float = 0.0

    def __post_init__(self) -> None:
        if self.m_x < 1 or self.m_z < 1:
            raise GeometryError(f"array needs at least one element per axis, got {self.m_x}x{self.m_z}")
        if self.d_x <= 0 or self.d_z <= 0:
            raise GeometryError("element spacing must be positive")

    @classmethod
    def from_config(cls, cfg: GroundArrayConfig) -> "GroundArray":
        return cls(
            m_x=cfg.m_x,
            m_z=cfg.m_z,
            d_x=cfg.spacing_x,
            d_z=cfg.spacing_z,
            elevation_tilt=cfg.elevation_tilt,
            base_height=cfg.base_height,
        )

    @property
    def n_antennas(self) -> int:
        return self.m_x * self.m_z

    @property
    def grid_indices(self) -> tuple[np.ndarray, np.ndarray]:
        """(i_m, j_m) for every antenna m."""

        m = np.arange(self.n_antennas)
        return m // self.m_z, m % self.m_z

    @property
    def antenna_positions(self) -> np.ndarray:
        i_m, j_m = self.grid_indices
        return np.column_stack([i_m * self.d_x, np.zeros(self.n_antennas), j_m * self.d_z])

    def antenna_index(self, i: int, j: int) -> int:
        return i * self.m_z + j


@dataclass(frozen=True)
class SwarmState:
    """Ordered UAV positions (N x 3, meters) in the GS frame."""

    positions: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.positions, dtype=float, copy=True)
        if array.ndim == 1 and array.size == 3:
            array = array.reshape(1, 3)
        if array.ndim != 2 or array.shape[1] != 3:
            raise GeometryError(f"positions must be N x 3, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise GeometryError("positions must be finite")
        array.setflags(write=False)
        object.__setattr__(self, "positions", array)

    @property
    def n_uavs(self) -> int:
        return self.positions.shape[0]

    @property
    def x(self) -> np.ndarray:
        return self.positions[:, 0]

    @property
    def y(self) -> np.ndarray:
        return self.positions[:, 1]

    @property
    def z(self) -> np.ndarray:
        return self.positions[:, 2]

    def translated(self, offsets: np.ndarray) -> "SwarmState":
        return SwarmState(self.positions + np.asarray(offsets, dtype=float))

    def permuted(self, order: np.ndarray) -> "SwarmState":
        return SwarmState(self.positions[np.asarray(order, dtype=int)])

    def distances_to(self, other: "SwarmState") -> np.ndarray:
        if other.n_uavs != self.n_uavs:
            raise GeometryError("swarms differ in size")
        return np.linalg.norm(self.positions - other.positions, axis=1)


@dataclass(frozen=True)
class EnvConstants:
    """Wavelength, mean range R and the lattice periods S_x, S_z."""

    wavelength: float
    range_r: float
    s_x: float
    s_z: float

    def eps(self, swarm: SwarmState) -> np.ndarray:
        """Per-UAV range ratio y_n / R."""

        return swarm.y / self.range_r


@dataclass(frozen=True)
class FarFieldReport:
    ok: bool
    worst_ratio: float
    ratios: Dict[str, float] = field(default_factory=dict)


def env_constants(gs: GroundArray, swarm: SwarmState, wavelength: float) -> EnvConstants:
    if swarm.n_uavs < 1:
        raise GeometryError("environment constants need at least one UAV")
    if np.any(swarm.y <= 0):
        raise GeometryError("all UAVs must be in front of the array (y > 0)")
    if wavelength <= 0:
        raise GeometryError("wavelength must be positive")
    range_r = float(np.mean(swarm.y))
    return EnvConstants(
        wavelength=wavelength,
        range_r=range_r,
        s_x=wavelength * range_r / gs.d_x,
        s_z=wavelength * range_r / gs.d_z,
    )


def far_field_report(swarm: SwarmState, gs: GroundArray, ratio_threshold: float) -> FarFieldReport:
    """Check the far-field conditions; every ratio must stay below the threshold."""

    y = swarm.y
    if np.any(y <= 0):
        return FarFieldReport(ok=False, worst_ratio=float("inf"), ratios={"y": float("inf")})

    spread = np.abs(y[:, None] - y[None, :]) / y[:, None]
    ratios = {
        "range_spread": float(spread.max()),
        "x_offset": float(np.max(np.abs(swarm.x) / y)),
        "z_offset": float(np.max(np.abs(swarm.z) / y)),
        "aperture_x": float(np.max(gs.m_x * gs.d_x / y)),
        "aperture_z": float(np.max(gs.m_z * gs.d_z / y)),
    }
    worst = max(ratios.values())
    return FarFieldReport(ok=worst <= ratio_threshold, worst_ratio=worst, ratios=ratios)


def scenario_to_gs_frame(world_points: np.ndarray, gs: GroundArray) -> np.ndarray:
    """Rotate world points (z up, y horizontal) into the tilted GS frame."""

    points = np.atleast_2d(np.asarray(world_points, dtype=float)).copy()
    points[:, 2] -= gs.base_height
    cos_t, sin_t = np.cos(gs.elevation_tilt), np.sin(gs.elevation_tilt)
    y = points[:, 1] * cos_t + points[:, 2] * sin_t
    z = -points[:, 1] * sin_t + points[:, 2] * cos_t
    return np.column_stack([points[:, 0], y, z])


def gs_frame_to_world(frame_points: np.ndarray, gs: GroundArray) -> np.ndarray:
    points = np.atleast_2d(np.asarray(frame_points, dtype=float))
    cos_t, sin_t = np.cos(gs.elevation_tilt), np.sin(gs.elevation_tilt)
    y = points[:, 1] * cos_t - points[:, 2] * sin_t
    z = points[:, 1] * sin_t + points[:, 2] * cos_t + gs.base_height
    return np.column_stack([points[:, 0], y, z])
