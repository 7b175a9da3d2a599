"""Linear receivers: LMMSE sum rate and the matched-filter uplink design."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from channel.los import ChannelMatrix
from core.exceptions import ChannelError
from core.models import LinkBudget

from .rates import capacity, gram_orthogonality_residual, single_user_bound


@dataclass(frozen=True)
class RateReport:
    per_stream_sinr: np.ndarray
    sum_rate: float
    capacity: float
    single_user_bound: float
    gram_residual: float


def _sinr(h_true: np.ndarray, combiners: np.ndarray, budget: LinkBudget) -> np.ndarray:
    # response[n, i] = w_nᴴ h_i
    response = combiners.conj().T @ h_true
    signal = budget.tx_power * np.abs(np.diag(response)) ** 2
    interference = budget.tx_power * (np.sum(np.abs(response) ** 2, axis=1) - np.abs(np.diag(response)) ** 2)
    noise = budget.noise_power * np.sum(np.abs(combiners) ** 2, axis=0)
    return signal / (noise + np.maximum(interference, 0.0))


def _rate_report(h_true: ChannelMatrix, sinr: np.ndarray, budget: LinkBudget) -> RateReport:
    return RateReport(
        per_stream_sinr=sinr,
        sum_rate=float(np.sum(np.log2(1.0 + sinr))),
        capacity=capacity(h_true, budget.rho),
        single_user_bound=single_user_bound(h_true, budget.rho),
        gram_residual=gram_orthogonality_residual(h_true) if h_true.n_uavs > 1 else 0.0,
    )


def lmmse_combiners(h_est: ChannelMatrix, budget: LinkBudget) -> np.ndarray:
    """Columns w_n = (σ²I + P_T Σ_{i≠n} h_i h_iᴴ)⁻¹ h_n built from the estimate."""

    est = h_est.entries
    n_antennas, n_uavs = est.shape
    full = budget.noise_power * np.eye(n_antennas) + budget.tx_power * (est @ est.conj().T)
    combiners = np.empty_like(est)
    for n in range(n_uavs):
        h_n = est[:, n]
        covariance = full - budget.tx_power * np.outer(h_n, h_n.conj())
        combiners[:, n] = np.linalg.solve(covariance, h_n)
    return combiners


def lmmse_sum_rate(h_true: ChannelMatrix, h_est: ChannelMatrix, budget: LinkBudget) -> RateReport:
    if h_true.entries.shape != h_est.entries.shape:
        raise ChannelError(
            f"true and estimated channels differ in shape: {h_true.entries.shape} vs {h_est.entries.shape}"
        )
    try:
        combiners = lmmse_combiners(h_est, budget)
    except np.linalg.LinAlgError as exc:
        raise ChannelError("interference covariance is singular") from exc
    return _rate_report(h_true, _sinr(h_true.entries, combiners, budget), budget)


@dataclass(frozen=True)
class UplinkDesign:
    precoder: np.ndarray  # N x N
    combiner: np.ndarray  # M x N


def uplink_linear_design(h: ChannelMatrix, budget: LinkBudget) -> UplinkDesign:
    """V = √P_T I and the matched filter W = H / (‖H‖_F / M)."""

    norm = np.sqrt(h.frobenius_sq)
    if norm == 0:
        raise ChannelError("matched filter undefined for a zero channel")
    return UplinkDesign(
        precoder=np.sqrt(budget.tx_power) * np.eye(h.n_uavs),
        combiner=h.entries / (norm / h.n_antennas),
    )


def matched_filter_sum_rate(h_true: ChannelMatrix, budget: LinkBudget) -> RateReport:
    design = uplink_linear_design(h_true, budget)
    return _rate_report(h_true, _sinr(h_true.entries, design.combiner, budget), budget)
