"""Tests for capacity, the single-user bound and the linear receivers."""

from __future__ import annotations

import numpy as np
import pytest

from channel.los import ChannelMatrix, los_channel
from core.exceptions import ChannelError
from metrics.lmmse import lmmse_sum_rate, matched_filter_sum_rate, uplink_linear_design
from metrics.rates import capacity, gram_orthogonality_residual, single_user_bound
from placement.optimal_set import orthogonal_grid
from tests.conftest import REFERENCE_WAVELENGTH


def _dft_channel(size: int, gain: float = 1.0) -> ChannelMatrix:
    m = np.arange(size)
    return ChannelMatrix(gain * np.exp(-2j * np.pi * np.outer(m, m) / size))


def _random_channel(rng, n_antennas: int = 6, n_uavs: int = 4) -> ChannelMatrix:
    return ChannelMatrix(rng.standard_normal((n_antennas, n_uavs)) + 1j * rng.standard_normal((n_antennas, n_uavs)))


def test_capacity_never_exceeds_the_single_user_bound(rng):
    for _ in range(20):
        h = _random_channel(rng)
        assert capacity(h, 3.0) <= single_user_bound(h, 3.0) + 1e-9


def test_orthogonal_columns_reach_the_bound():
    h = _dft_channel(4, gain=0.5)

    assert gram_orthogonality_residual(h) == pytest.approx(0.0, abs=1e-12)
    assert capacity(h, 10.0) == pytest.approx(single_user_bound(h, 10.0), rel=1e-12)


def test_gram_residual_needs_two_uavs():
    with pytest.raises(ChannelError):
        gram_orthogonality_residual(ChannelMatrix(np.ones((4, 1))))


def test_capacity_rejects_non_finite_channels():
    entries = np.ones((2, 2), dtype=complex)
    entries[0, 0] = np.nan
    with pytest.raises(ChannelError):
        capacity(ChannelMatrix(entries), 1.0)


def test_reference_lattice_is_nearly_orthogonal(reference_gs, reference_env, budget):
    swarm = orthogonal_grid(reference_env, reference_gs, np.full(12, 2000.0))
    h = los_channel(swarm, reference_gs, REFERENCE_WAVELENGTH)

    assert gram_orthogonality_residual(h) <= 1e-2
    assert capacity(h, budget.rho) >= 0.99 * single_user_bound(h, budget.rho)
    assert lmmse_sum_rate(h, h, budget).sum_rate >= 0.99 * single_user_bound(h, budget.rho)


def test_lmmse_on_orthogonal_streams_is_interference_free(unit_budget):
    h = _dft_channel(4, gain=0.3)

    report = lmmse_sum_rate(h, h, unit_budget)

    np.testing.assert_allclose(report.per_stream_sinr, 4 * 0.3**2, rtol=1e-9)
    assert report.sum_rate == pytest.approx(report.single_user_bound, rel=1e-9)


def test_lmmse_dominates_the_matched_filter(rng, unit_budget):
    for _ in range(10):
        h = _random_channel(rng)
        lmmse = lmmse_sum_rate(h, h, unit_budget)
        matched = matched_filter_sum_rate(h, unit_budget)

        assert np.all(lmmse.per_stream_sinr >= matched.per_stream_sinr * (1 - 1e-9))
        assert lmmse.sum_rate <= lmmse.capacity + 1e-9


def test_matched_filter_is_normalized_by_the_channel_norm(rng, unit_budget):
    h = _random_channel(rng)

    design = uplink_linear_design(h, unit_budget)

    assert np.linalg.norm(design.combiner) == pytest.approx(h.n_antennas)
    np.testing.assert_allclose(design.precoder, np.eye(h.n_uavs))


def test_lmmse_rejects_mismatched_estimates(rng, unit_budget):
    with pytest.raises(ChannelError):
        lmmse_sum_rate(_random_channel(rng, 6, 4), _random_channel(rng, 6, 3), unit_budget)


def test_capacity_grows_with_snr(rng):
    rhos = np.logspace(-3, 3, 25)
    for _ in range(10):
        h = _random_channel(rng)
        values = np.array([capacity(h, rho) for rho in rhos])

        assert np.all(np.diff(values) >= -1e-12)


def test_small_gram_residual_means_the_rate_meets_the_bound(rng, unit_budget):
    base = _dft_channel(4, gain=0.5).entries
    noise = rng.standard_normal(base.shape) + 1j * rng.standard_normal(base.shape)
    checked = 0
    for scale in np.logspace(-7, -1, 13):
        h = ChannelMatrix(base + scale * noise)
        if gram_orthogonality_residual(h) > 1e-3:
            continue
        report = lmmse_sum_rate(h, h, unit_budget)
        checked += 1

        assert report.sum_rate >= (1 - 1e-3) * report.single_user_bound

    assert checked >= 5
