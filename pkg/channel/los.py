"""Exact-distance line-of-sight channel between the swarm and the ground array."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from core.exceptions import ChannelError, GeometryError

from .geometry import GroundArray, SwarmState

Scaling = Literal["normalized", "path_loss"]
Provenance = Literal["los", "rician", "estimated"]


@dataclass(frozen=True)
class ChannelMatrix:
    """Complex M x N channel; column n belongs to UAV n."""

    entries: np.ndarray
    scaling: Scaling = "path_loss"
    provenance: Provenance = "los"

    def __post_init__(self) -> None:
        array = np.array(self.entries, dtype=complex, copy=True)
        if array.ndim != 2:
            raise ChannelError(f"channel must be a matrix, got shape {array.shape}")
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    @property
    def n_antennas(self) -> int:
        return self.entries.shape[0]

    @property
    def n_uavs(self) -> int:
        return self.entries.shape[1]

    @property
    def frobenius_sq(self) -> float:
        return float(np.sum(np.abs(self.entries) ** 2))

    @property
    def mean_entry_power(self) -> float:
        return self.frobenius_sq / self.entries.size

    def column_norms_sq(self) -> np.ndarray:
        return np.sum(np.abs(self.entries) ** 2, axis=0)

    def gram(self) -> np.ndarray:
        return self.entries.conj().T @ self.entries

    def replace(self, entries: np.ndarray, provenance: Provenance | None = None) -> "ChannelMatrix":
        return ChannelMatrix(entries, self.scaling, provenance or self.provenance)


def distance_matrix(swarm: SwarmState, gs: GroundArray) -> np.ndarray:
    """M x N matrix of exact antenna-to-UAV distances."""

    diff = swarm.positions[None, :, :] - gs.antenna_positions[:, None, :]
    return np.linalg.norm(diff, axis=2)


def los_channel(
    swarm: SwarmState,
    gs: GroundArray,
    wavelength: float,
    scaling: Scaling = "path_loss",
) -> ChannelMatrix:
    if swarm.n_uavs < 1:
        raise GeometryError("channel needs at least one UAV")
    if swarm.n_uavs > gs.n_antennas:
        raise GeometryError(
            f"{swarm.n_uavs} UAVs exceed the {gs.n_antennas} ground antennas"
        )
    distances = distance_matrix(swarm, gs)
    if np.any(distances <= 0):
        raise GeometryError("a UAV coincides with a ground antenna")

    # reduce d/λ modulo one before scaling by 2π to keep the phase exact
    cycles = np.mod(distances / wavelength, 1.0)
    entries = np.exp(-2j * np.pi * cycles)
    if scaling == "path_loss":
        entries = entries * (wavelength / (4 * np.pi * distances))
    elif scaling != "normalized":
        raise ChannelError(f"unknown scaling '{scaling}'")
    return ChannelMatrix(entries, scaling=scaling, provenance="los")
