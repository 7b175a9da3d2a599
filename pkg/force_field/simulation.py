"""Synchronous-round simulation of the distributed Force Field protocol."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from channel.disturbances import disturbed_channel
from channel.geometry import EnvConstants, GroundArray, SwarmState
from channel.phases import far_field_phase_differences, phase_differences
from channel.streams import RandomStreams
from core.exceptions import FormationError
from core.models import DisturbanceConfig, FFConfig, LinkBudget
from metrics.lmmse import RateReport, lmmse_sum_rate
from utils.logger import get_logger

from .agent import FFAgent, controller_step
from .formation import formation_from_phases, sub_grid_shape

LOGGER = get_logger(__name__)

CONVERGENCE_ERROR = 1e-3  # rad


def kp_guarantee_bound(swarm: SwarmState, env: EnvConstants) -> tuple[float, float]:
    """Largest gains (x, z) for which every error contracts: min(eps) * S / (4π)."""

    eps = env.eps(swarm)
    if np.any(eps <= 0):
        raise FormationError("range ratios must be positive")
    smallest = float(eps.min())
    return smallest * env.s_x / (4 * np.pi), smallest * env.s_z / (4 * np.pi)


def travel_bound_ff(eps_anchor: float, eps_n: float | np.ndarray, env: EnvConstants) -> float | np.ndarray:
    return np.hypot(env.s_x, env.s_z) * np.maximum(eps_anchor, eps_n)


def resolve_gain(cfg: FFConfig, swarm: SwarmState, env: EnvConstants, gs: GroundArray) -> tuple[float, float]:
    """Gains (x, z): an explicit k_p on both axes, else kp_scale times each axis bound."""

    bounds = kp_guarantee_bound(swarm, env)
    if cfg.k_p is not None:
        gains = (cfg.k_p, cfg.k_p)
    else:
        gains = (cfg.kp_scale * bounds[0], cfg.kp_scale * bounds[1])
    for axis, gain, bound, size in zip("xz", gains, bounds, (gs.m_x, gs.m_z)):
        if size > 1 and gain >= bound:
            LOGGER.warning(
                "K_p=%.4f on %s exceeds the contraction gate %.4f; convergence is not guaranteed", gain, axis, bound
            )
    return gains


@dataclass
class FFTrajectory:
    """Per-round record of a Force Field run; entry k is the state after k moves."""

    positions: List[SwarmState] = field(default_factory=list)
    rates: List[RateReport] = field(default_factory=list)
    max_errors: List[float] = field(default_factory=list)
    max_state_steps: List[float] = field(default_factory=list)
    travel_history: List[np.ndarray] = field(default_factory=list)
    cumulative_travel: Optional[np.ndarray] = None
    agents: List[FFAgent] = field(default_factory=list)
    k_p: tuple[float, float] = (0.0, 0.0)  # (x, z)
    converged: bool = False
    stop_reason: str = "iterations"
    convergence_round: Dict[int, Optional[int]] = field(default_factory=dict)

    @property
    def rounds(self) -> int:
        return len(self.positions) - 1

    def anchor(self) -> FFAgent:
        return next(agent for agent in self.agents if agent.is_anchor)


def _phase_board(
    model: str, h_est, positions: SwarmState, gs: GroundArray, wavelength: float
) -> tuple[np.ndarray, np.ndarray]:
    if model == "far_field":
        return far_field_phase_differences(positions, gs, wavelength)
    return phase_differences(h_est, gs)


def _observe_all(agents: List[FFAgent], dphi_x: np.ndarray, dphi_z: np.ndarray) -> None:
    # every agent reads its own phases and only its two neighbors' shared values
    for agent in agents:
        own = (float(dphi_x[agent.uav_index]), float(dphi_z[agent.uav_index]))
        x_shared = None if agent.x_neighbor is None else float(dphi_x[agent.x_neighbor])
        z_shared = None if agent.z_neighbor is None else float(dphi_z[agent.z_neighbor])
        agent.observe(own, x_shared, z_shared)


def _max_error(agents: List[FFAgent]) -> float:
    return max((max(abs(a.error("x")), abs(a.error("z"))) for a in agents), default=0.0)


def _states(agents: List[FFAgent]) -> np.ndarray:
    return np.array([[s if s is not None else 0.0 for s in agent.unwrapped_state] for agent in agents])


def run_force_field(
    init: SwarmState,
    gs: GroundArray,
    env: EnvConstants,
    cfg: FFConfig,
    disturbances: Optional[DisturbanceConfig] = None,
    budget: Optional[LinkBudget] = None,
    seed: int = 0,
    grid_shape: Optional[tuple[int, int]] = None,
) -> FFTrajectory:
    """Run K_c synchronous rounds: sense, share phases, measure, then all move at once.

    Rates are evaluated on the exact-distance channel at the (possibly
    perturbed) positions of every round. Disturbed runs that never settle are
    reported through ``converged`` rather than raised.
    """

    disturbances = disturbances or DisturbanceConfig()
    budget = budget or LinkBudget.from_db()
    streams = RandomStreams(seed, disturbances.rng_seed)
    shape = grid_shape or sub_grid_shape(init.n_uavs, gs)

    positions = init.positions.copy()
    travel = np.zeros(init.n_uavs)
    trajectory = FFTrajectory()
    trajectory.k_p = resolve_gain(cfg, init, env, gs)
    agents: List[FFAgent] = []
    target_sinr = None if cfg.sinr_target_db is None else 10.0 ** (cfg.sinr_target_db / 10.0)
    previous_states: Optional[np.ndarray] = None

    for round_index in range(cfg.iterations + 1):
        swarm = SwarmState(positions)
        realization = disturbed_channel(swarm, gs, env.wavelength, disturbances, budget, streams)
        rate = lmmse_sum_rate(realization.h_true, realization.h_est, budget)
        trajectory.positions.append(swarm)
        trajectory.rates.append(rate)
        trajectory.travel_history.append(travel.copy())

        dphi_x, dphi_z = _phase_board(cfg.phase_model, realization.h_est, realization.positions, gs, env.wavelength)
        if not agents:
            agents = formation_from_phases(dphi_x, dphi_z, gs, positions, shape)
            trajectory.agents = agents
        _observe_all(agents, dphi_x, dphi_z)

        states = _states(agents)
        if previous_states is not None:
            trajectory.max_state_steps.append(float(np.max(np.abs(states - previous_states))))
        previous_states = states
        error = _max_error(agents)
        trajectory.max_errors.append(error)
        for agent in agents:
            settled = max(abs(agent.error("x")), abs(agent.error("z"))) < CONVERGENCE_ERROR
            if not settled:
                trajectory.convergence_round[agent.uav_index] = None
            elif trajectory.convergence_round.get(agent.uav_index) is None:
                trajectory.convergence_round[agent.uav_index] = round_index
        LOGGER.debug("FF round %d: max error %.3e rad, sum rate %.3f", round_index, error, rate.sum_rate)

        if round_index == cfg.iterations:
            break
        if target_sinr is not None and np.all(rate.per_stream_sinr >= target_sinr):
            trajectory.stop_reason = "sinr_target"
            break

        moves = np.zeros((init.n_uavs, 3))
        for agent in agents:
            moves[agent.uav_index, 0] = controller_step(agent, "x", trajectory.k_p[0])
            moves[agent.uav_index, 2] = controller_step(agent, "z", trajectory.k_p[1])
        if cfg.stall_threshold is not None and np.max(np.abs(moves)) < cfg.stall_threshold:
            trajectory.stop_reason = "stalled"
            break

        positions = positions + moves
        travel += np.hypot(moves[:, 0], moves[:, 2])
        for agent in agents:
            agent.position = positions[agent.uav_index].copy()

    trajectory.cumulative_travel = travel
    trajectory.converged = trajectory.max_errors[-1] < CONVERGENCE_ERROR
    LOGGER.info(
        "Force Field stopped after %d round(s) (%s): max error %.3e rad, final sum rate %.3f",
        trajectory.rounds,
        trajectory.stop_reason,
        trajectory.max_errors[-1],
        trajectory.rates[-1].sum_rate,
    )
    return trajectory
