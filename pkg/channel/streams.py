"""Seeded random streams, one per draw purpose and UAV."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

from core.exceptions import ChannelError

# spawn keys; appending a purpose never shifts an existing stream
_PLACEMENT = 0
_RICIAN = 1
_SHADOWING = 2
_ESTIMATION = 3
_MOTION = 4

_DISTURBANCE_PURPOSES = {
    "rician": _RICIAN,
    "shadowing": _SHADOWING,
    "estimation": _ESTIMATION,
    "motion": _MOTION,
}

RngSource = Union[np.random.Generator, Sequence[np.random.Generator]]


def _stream(entropy: list[int], *spawn_key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=entropy, spawn_key=spawn_key))


def per_uav_draws(
    source: RngSource,
    n_uavs: int,
    sample: Callable[[np.random.Generator, tuple[int, ...]], np.ndarray],
    shape: tuple[int, ...] = (),
) -> np.ndarray:
    """Array of shape (n_uavs, *shape); row n comes from generator n when one per UAV is given."""

    if isinstance(source, np.random.Generator):
        return np.asarray(sample(source, (n_uavs, *shape)))
    generators = list(source)
    if len(generators) != n_uavs:
        raise ChannelError(f"expected {n_uavs} per-UAV generators, got {len(generators)}")
    return np.stack([np.asarray(sample(generator, shape)) for generator in generators])


@dataclass
class RandomStreams:
    """Independent generators keyed by trial seed, disturbance seed, purpose and UAV.

    Placement draws depend on the trial seed only, so changing the disturbance
    seed never moves the initial swarm. UAV n always draws from its own stream,
    so adding a UAV leaves the draws of the others untouched.
    """

    seed: int
    disturbance_seed: int = 0
    _cache: dict[str, list[np.random.Generator]] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self) -> None:
        self._trial = [int(self.seed) & 0xFFFFFFFFFFFFFFFF]
        self._disturbance = self._trial + [int(self.disturbance_seed) & 0xFFFFFFFFFFFFFFFF]

    def _generators(self, purpose: str, n_uavs: int) -> list[np.random.Generator]:
        cached = self._cache.setdefault(purpose, [])
        while len(cached) < n_uavs:
            if purpose == "placement":
                cached.append(_stream(self._trial, _PLACEMENT, len(cached)))
            else:
                cached.append(_stream(self._disturbance, _DISTURBANCE_PURPOSES[purpose], len(cached)))
        return cached[:n_uavs]

    def placement(self, n_uavs: int) -> list[np.random.Generator]:
        return self._generators("placement", n_uavs)

    def rician(self, n_uavs: int) -> list[np.random.Generator]:
        return self._generators("rician", n_uavs)

    def shadowing(self, n_uavs: int) -> list[np.random.Generator]:
        return self._generators("shadowing", n_uavs)

    def estimation(self, n_uavs: int) -> list[np.random.Generator]:
        return self._generators("estimation", n_uavs)

    def motion(self, n_uavs: int) -> list[np.random.Generator]:
        return self._generators("motion", n_uavs)
