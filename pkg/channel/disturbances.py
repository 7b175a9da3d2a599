"""Rician fading, shadowing, channel estimation error and motion error."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import ChannelError
from core.models import DisturbanceConfig, LinkBudget

from .geometry import GroundArray, SwarmState
from .los import ChannelMatrix, los_channel
from .streams import RandomStreams, RngSource, per_uav_draws


def _complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...], variance: float) -> np.ndarray:
    scale = math.sqrt(variance / 2.0)
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def rician_channel(h_los: ChannelMatrix, k_factor: float, rng: RngSource) -> ChannelMatrix:
    """Mix the LOS channel with a power-matched Gaussian NLOS component.

    ``rng`` is one generator, or one per UAV where column n draws from generator n.
    """

    if k_factor < 0 or math.isnan(k_factor):
        raise ChannelError(f"Rician K-factor must be non-negative, got {k_factor}")
    if h_los.scaling != "path_loss":
        raise ChannelError("Rician fading expects a path-loss scaled LOS channel")
    if math.isinf(k_factor):
        return h_los

    variance = h_los.mean_entry_power
    nlos = per_uav_draws(
        rng, h_los.n_uavs, lambda generator, shape: _complex_gaussian(generator, shape, variance), (h_los.n_antennas,)
    ).T
    entries = math.sqrt(k_factor / (k_factor + 1.0)) * h_los.entries + math.sqrt(1.0 / (k_factor + 1.0)) * nlos
    return h_los.replace(entries, provenance="rician")


def apply_shadowing(h: ChannelMatrix, sigma_db: float, rng: RngSource) -> ChannelMatrix:
    """Scale each UAV column by an independent log-normal amplitude."""

    if sigma_db < 0:
        raise ChannelError("shadowing sigma must be non-negative")
    if sigma_db == 0:
        return h
    gains_db = per_uav_draws(rng, h.n_uavs, lambda generator, shape: generator.normal(0.0, sigma_db, size=shape))
    return h.replace(h.entries * (10.0 ** (gains_db / 20.0))[None, :])


def estimation_error_variance(h: ChannelMatrix, snr: float, t_tau: int) -> float:
    return h.mean_entry_power / (1.0 + snr * t_tau)


def estimate_channel(h: ChannelMatrix, snr: float, t_tau: int, rng: RngSource) -> ChannelMatrix:
    """Add i.i.d. Gaussian estimation error with variance shrinking in snr * T_tau."""

    if snr < 0:
        raise ChannelError(f"snr must be non-negative, got {snr}")
    if t_tau < 0:
        raise ChannelError(f"training symbols must be non-negative, got {t_tau}")
    variance = estimation_error_variance(h, snr, t_tau)
    error = per_uav_draws(
        rng, h.n_uavs, lambda generator, shape: _complex_gaussian(generator, shape, variance), (h.n_antennas,)
    ).T
    return h.replace(h.entries + error, provenance="estimated")


def perturb_positions(swarm: SwarmState, sigma: float, rng: RngSource) -> SwarmState:
    if sigma < 0:
        raise ChannelError("motion sigma must be non-negative")
    if sigma == 0:
        return swarm
    offsets = per_uav_draws(rng, swarm.n_uavs, lambda generator, shape: generator.normal(0.0, sigma, size=shape), (3,))
    return swarm.translated(offsets)


def receive_snr(h: ChannelMatrix, budget: LinkBudget) -> float:
    """Mean per-entry receive SNR used to size the estimation error."""

    return budget.tx_power * h.mean_entry_power / budget.noise_power


@dataclass(frozen=True)
class ChannelRealization:
    """Channel seen by the receiver and the one used to form combiners."""

    h_true: ChannelMatrix
    h_est: ChannelMatrix
    positions: SwarmState


def disturbed_channel(
    swarm: SwarmState,
    gs: GroundArray,
    wavelength: float,
    disturbances: DisturbanceConfig,
    budget: LinkBudget,
    streams: RandomStreams,
) -> ChannelRealization:
    """Draw one realization: motion error, Rician fading, shadowing, estimation error."""

    actual = perturb_positions(swarm, disturbances.motion_sigma, streams.motion(swarm.n_uavs))
    h = los_channel(actual, gs, wavelength, scaling="path_loss")
    h = rician_channel(h, disturbances.rician_k, streams.rician(swarm.n_uavs))
    h = apply_shadowing(h, disturbances.shadowing_sigma_db, streams.shadowing(swarm.n_uavs))
    if disturbances.perfect_estimation:
        h_est = h
    else:
        h_est = estimate_channel(
            h, receive_snr(h, budget), disturbances.est_training_symbols, streams.estimation(swarm.n_uavs)
        )
    return ChannelRealization(h_true=h, h_est=h_est, positions=actual)
