"""Scenario construction: presets, config loading and random initial swarms."""

from __future__ import annotations

import json
from pathlib import Path
from typing import NamedTuple

import numpy as np
from pydantic import ValidationError

from channel.geometry import EnvConstants, GroundArray, SwarmState, env_constants, scenario_to_gs_frame
from channel.streams import RandomStreams, RngSource, per_uav_draws
from config import get_settings
from core.exceptions import ConfigurationError, GeometryError
from core.models import BCDConfig, FFConfig, LinkBudget, ScenarioConfig
from utils.file_handler import read_text_file
from utils.logger import get_logger


LOGGER = get_logger(__name__)

PRESET_DIR = Path(__file__).resolve().parents[1] / "configs"


class Scenario(NamedTuple):
    swarm: SwarmState
    gs: GroundArray
    env: EnvConstants
    budget: LinkBudget


def box_center(cfg: ScenarioConfig) -> np.ndarray:
    """World-frame center of the region of interest, R_ROI along the tilted boresight."""

    tilt = cfg.ground_array.elevation_tilt
    return np.array(
        [
            0.0,
            cfg.roi_distance * np.cos(tilt),
            cfg.ground_array.base_height + cfg.roi_distance * np.sin(tilt),
        ]
    )


def sample_world_positions(cfg: ScenarioConfig, rng: RngSource) -> np.ndarray:
    sides = np.asarray(cfg.box, dtype=float)
    unit = per_uav_draws(rng, cfg.n_uavs, lambda generator, shape: generator.random(shape), (3,))
    offsets = (unit - 0.5) * sides
    return box_center(cfg) + offsets


def build_scenario(cfg: ScenarioConfig, seed: int) -> Scenario:
    """Draw the initial swarm of one trial and derive the environment constants.

    Args:
        cfg: Validated scenario configuration
        seed: Trial seed; only the placement stream is consumed here
    """

    gs = GroundArray.from_config(cfg.ground_array)
    streams = RandomStreams(seed, cfg.disturbances.rng_seed)
    world = sample_world_positions(cfg, streams.placement(cfg.n_uavs))
    frame = scenario_to_gs_frame(world, gs)
    if np.any(frame[:, 1] <= 0):
        raise ConfigurationError(
            f"box {tuple(cfg.box)} at R={cfg.roi_distance} m places UAVs behind the ground array"
        )

    swarm = SwarmState(frame)
    try:
        env = env_constants(gs, swarm, cfg.wavelength)
    except GeometryError as exc:
        LOGGER.exception("Scenario '%s' produced an invalid swarm: %s", cfg.name, exc)
        raise ConfigurationError(f"scenario '{cfg.name}' is not realizable") from exc

    LOGGER.debug(
        "Scenario '%s' seed %d: R=%.2f m, S_x=%.3f m, S_z=%.3f m",
        cfg.name,
        seed,
        env.range_r,
        env.s_x,
        env.s_z,
    )
    return Scenario(swarm=swarm, gs=gs, env=env, budget=cfg.budget.to_link_budget())


def load_config(path: str | Path) -> ScenarioConfig:
    """Read and validate a scenario JSON document."""

    try:
        payload = json.loads(read_text_file(str(path)))
    except (OSError, json.JSONDecodeError) as exc:
        LOGGER.exception("Unable to read scenario file '%s': %s", path, exc)
        raise ConfigurationError(f"unable to read scenario file '{path}'") from exc

    try:
        return ScenarioConfig.model_validate(payload)
    except ValidationError as exc:
        raise ConfigurationError(f"invalid scenario file '{path}': {exc}") from exc


def available_presets() -> list[str]:
    return sorted(path.stem for path in PRESET_DIR.glob("*.json"))


def load_preset(name: str) -> ScenarioConfig:
    """Return a shipped preset by name (e.g. ``default``, ``disturbed``)."""

    path = PRESET_DIR / f"{name}.json"
    if not path.is_file():
        raise ConfigurationError(
            f"unknown preset '{name}'; available: {', '.join(available_presets())}"
        )
    return load_config(path)


def resolve_config(reference: str | None) -> ScenarioConfig:
    """Accept a preset name, a JSON path or nothing (reference defaults)."""

    if reference is None:
        return with_settings_defaults(ScenarioConfig())
    candidate = Path(reference).expanduser()
    if candidate.suffix == ".json" or candidate.is_file():
        return with_settings_defaults(load_config(candidate.resolve()))
    return with_settings_defaults(load_preset(reference))


def with_settings_defaults(cfg: ScenarioConfig) -> ScenarioConfig:
    """Fill solver blocks the scenario file left out from the runtime settings."""

    settings = get_settings()
    updates = {}
    if "bcd" not in cfg.model_fields_set:
        updates["bcd"] = BCDConfig(tol=settings.bcd_tol, max_iters=settings.bcd_max_iters)
    if "ff" not in cfg.model_fields_set:
        updates["ff"] = FFConfig(iterations=settings.ff_iterations, kp_scale=settings.kp_scale)
    return cfg.model_copy(update=updates) if updates else cfg
