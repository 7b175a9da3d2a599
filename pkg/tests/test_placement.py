"""Tests for the orthogonal placement set, its membership test and the URA baseline."""

from __future__ import annotations

import numpy as np
import pytest

from channel.geometry import GroundArray, SwarmState, env_constants
from channel.los import los_channel
from core.exceptions import OptimizationError, PlacementError
from metrics.rates import capacity, gram_orthogonality_residual, single_user_bound
from placement import lemma1_grid
from placement.assignment import assignment_cost, solve_assignment
from placement.membership import membership_test
from placement.optimal_set import (
    PlacementParams,
    apply_integer_jumps,
    apply_scaled_shift,
    construct_placement,
    orthogonal_grid,
)
from placement.ura_baseline import ura_baseline
from tests.conftest import REFERENCE_WAVELENGTH, SHORT_WAVELENGTH


def _random_params(rng, gs, shifts=(0.03, -0.1)) -> PlacementParams:
    slots = rng.permutation(gs.n_antennas)
    i_m, j_m = gs.grid_indices
    return PlacementParams(
        grid_index=np.column_stack([i_m[slots], j_m[slots]]),
        jumps=rng.integers(-1, 2, size=(gs.n_antennas, 2)),
        shifts=shifts,
        eps=rng.uniform(0.95, 1.05, size=gs.n_antennas),
    )


def test_unshifted_placement_is_the_uniform_grid(reference_gs, reference_env):
    y = np.full(12, 2000.0)
    i_m, j_m = reference_gs.grid_indices
    params = PlacementParams(
        grid_index=np.column_stack([i_m, j_m]), jumps=np.zeros((12, 2)), shifts=(0.0, 0.0), eps=y / 2000.0
    )

    swarm = construct_placement(params, y, reference_env, reference_gs)

    np.testing.assert_allclose(swarm.positions, orthogonal_grid(reference_env, reference_gs, y).positions)


def test_placement_params_require_distinct_slots():
    with pytest.raises(PlacementError):
        PlacementParams(grid_index=[[0, 0], [0, 0]], jumps=[[0, 0], [0, 0]], shifts=(0.0, 0.0), eps=[1.0, 1.0])


def test_membership_recovers_slots_jumps_and_shift(reference_gs, reference_env, rng):
    for _ in range(20):
        params = _random_params(rng, reference_gs)
        y = params.eps * reference_env.range_r
        swarm = construct_placement(params, y, reference_env, reference_gs)

        report = membership_test(swarm, reference_env, reference_gs)

        assert report.member
        np.testing.assert_array_equal(report.recovered.grid_index, params.grid_index)
        np.testing.assert_array_equal(report.recovered.jumps, params.jumps)
        assert report.recovered.shifts == pytest.approx(params.shifts, abs=1e-9)


def test_membership_rejects_an_off_lattice_uav(reference_gs, reference_env, rng):
    params = _random_params(rng, reference_gs, shifts=(0.0, 0.0))
    y = params.eps * reference_env.range_r
    swarm = construct_placement(params, y, reference_env, reference_gs)
    positions = swarm.positions.copy()
    positions[4, 0] += 0.3 * reference_env.s_x * params.eps[4] / reference_gs.m_x

    report = membership_test(SwarmState(positions), reference_env, reference_gs)

    assert not report.member
    assert report.max_mismatch > 1e-3


def test_membership_rejects_oversized_swarms(reference_gs, reference_env):
    crowd = SwarmState(np.column_stack([np.arange(13.0), np.full(13, 2000.0), np.zeros(13)]))

    assert not membership_test(crowd, reference_env, reference_gs).member


def test_shift_and_jumps_keep_the_lattice_orthogonal(reference_gs, short_wave_env, rng):
    grid = orthogonal_grid(short_wave_env, reference_gs, np.full(12, 2000.0))
    moved = apply_scaled_shift(grid, short_wave_env, 0.2, -0.35)
    moved = apply_integer_jumps(moved, short_wave_env, rng.integers(-2, 3, 12), rng.integers(-2, 3, 12))
    h = los_channel(moved, reference_gs, SHORT_WAVELENGTH)

    assert membership_test(moved, short_wave_env, reference_gs).member
    assert gram_orthogonality_residual(h) <= 1e-2
    assert capacity(h, 1e3) == pytest.approx(single_user_bound(h, 1e3), rel=1e-2)


def test_integer_jumps_must_be_integers(reference_gs, reference_env):
    grid = orthogonal_grid(reference_env, reference_gs, np.full(12, 2000.0))

    with pytest.raises(PlacementError):
        apply_integer_jumps(grid, reference_env, np.full(12, 0.5), np.zeros(12))
    with pytest.raises(PlacementError):
        apply_integer_jumps(grid, reference_env, np.zeros(3), np.zeros(12))


def test_ura_baseline_lands_on_a_common_range_lattice(reference_gs, rng):
    init = SwarmState(
        np.column_stack(
            [rng.uniform(-5, 5, 12), rng.uniform(1850, 2150, 12), rng.uniform(-150, 150, 12)]
        )
    )
    env = env_constants(reference_gs, init, REFERENCE_WAVELENGTH)

    final = ura_baseline(init, env, reference_gs)

    np.testing.assert_allclose(final.y, np.mean(init.y))
    assert membership_test(final, env, reference_gs).member
    np.testing.assert_allclose(final.x.mean(), init.x.mean(), atol=1e-9)
    assert np.all(init.distances_to(final) > 0)


def test_exhaustive_and_hungarian_assignments_agree(rng):
    for _ in range(50):
        cost = rng.uniform(0, 10, size=(5, 6))

        exhaustive = solve_assignment(cost, exhaustive_limit=8)
        hungarian = solve_assignment(cost)

        assert len(set(exhaustive.tolist())) == 5
        assert assignment_cost(cost, exhaustive) == pytest.approx(assignment_cost(cost, hungarian))


def test_exhaustive_assignment_breaks_ties_toward_low_slots():
    np.testing.assert_array_equal(solve_assignment(np.zeros((2, 3)), exhaustive_limit=8), [0, 1])


@pytest.mark.parametrize("cost", [np.zeros((3, 2)), np.array([[np.inf, 1.0], [1.0, 0.0]])])
def test_assignment_rejects_invalid_costs(cost):
    with pytest.raises(OptimizationError):
        solve_assignment(cost)


def test_lemma1_grid_name_builds_the_orthogonal_grid():
    gs = GroundArray(m_x=2, m_z=2, d_x=3.0, d_z=3.0)
    y = np.full(4, 2000.0)
    env = env_constants(gs, SwarmState(np.array([[0.0, 2000.0, 0.0]])), 0.06)

    grid = lemma1_grid(env, gs, y)

    np.testing.assert_array_equal(grid.positions, orthogonal_grid(env, gs, y).positions)
    assert gram_orthogonality_residual(los_channel(grid, gs, 0.06)) <= 1e-2
