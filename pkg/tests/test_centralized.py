"""Tests for the relaxed minimal-travel problem and block coordinate descent."""

from __future__ import annotations

import logging
from itertools import permutations

import numpy as np
import pytest

from channel.geometry import GroundArray, SwarmState, env_constants
from config import get_settings
from core.exceptions import OptimizationError
from core.models import ScenarioConfig
from optimizers.bcd import assignment_step, bcd_solve, travel_bound_centralized
from optimizers.relaxation import build_relaxed_instance, nearest_jump, travel_objective
from optimizers.shift_solver import NormSumObjective, nearest_jump_travel, settled_shift_step, shift_step
from placement.membership import membership_test
from services.scenario_service import build_scenario
from tests.conftest import REFERENCE_WAVELENGTH


def _box_swarm(rng, n_uavs: int = 12, sides=(10.0, 300.0, 300.0), range_r: float = 2000.0) -> SwarmState:
    half = np.asarray(sides) / 2.0
    center = np.array([0.0, range_r, 0.0])
    return SwarmState(center + rng.uniform(-half, half, size=(n_uavs, 3)))


def _instance(rng, gs, n_uavs=None):
    init = _box_swarm(rng, n_uavs or gs.n_antennas)
    env = env_constants(gs, init, REFERENCE_WAVELENGTH)
    return build_relaxed_instance(init, env, gs)


def test_relaxed_offsets_stay_inside_one_period(reference_gs, rng):
    for _ in range(50):
        instance = _instance(rng, reference_gs)
        assert np.all(instance.tilde_x >= 0) and np.all(instance.tilde_x < instance.period_x[None, :])
        assert np.all(instance.tilde_z >= 0) and np.all(instance.tilde_z < instance.period_z[None, :])


def test_nearest_jump_matches_brute_force(rng):
    for _ in range(2000):
        s, eps = rng.uniform(10, 200), rng.uniform(0.8, 1.2)
        period = s * eps
        tilde, delta = rng.uniform(0, period), rng.uniform(-0.5, 0.5)

        jump = nearest_jump(tilde, delta, s, eps)
        best = min(abs(tilde + (f + delta) * period) for f in range(-3, 4))

        assert jump in (-1, 0)
        assert abs(tilde + (jump + delta) * period) == pytest.approx(best, abs=1e-9)


@pytest.mark.parametrize("tilde, delta", [(-1.0, 0.0), (10.0, 0.0), (1.0, 0.6)])
def test_nearest_jump_rejects_out_of_range_inputs(tilde, delta):
    with pytest.raises(OptimizationError):
        nearest_jump(tilde, delta, 10.0, 1.0)


def test_assignment_step_matches_exhaustive_search(rng):
    gs = GroundArray(m_x=3, m_z=2, d_x=2.0, d_z=3.0)
    for _ in range(30):
        n_uavs = int(rng.integers(2, 7))
        instance = _instance(rng, gs, n_uavs)
        delta = (float(rng.uniform(-0.5, 0.5)), float(rng.uniform(-0.5, 0.5)))

        slots = assignment_step(instance, delta)
        best = min(
            travel_objective(instance, np.array(candidate), delta)
            for candidate in permutations(range(gs.n_antennas), n_uavs)
        )

        assert travel_objective(instance, slots, delta) == pytest.approx(best, abs=1e-9)


def test_shift_step_matches_a_dense_grid(reference_gs, rng):
    axis = np.linspace(-0.5, 0.5, 201)
    grid_x, grid_z = np.meshgrid(axis, axis, indexing="ij")
    for _ in range(10):
        instance = _instance(rng, reference_gs)
        slots = rng.permutation(reference_gs.n_antennas)
        uavs = np.arange(reference_gs.n_antennas)
        tilde_x = instance.tilde_x[slots, uavs]
        tilde_z = instance.tilde_z[slots, uavs]
        # jumps frozen at the incumbent shift (0, 0)
        jump_x = np.where(tilde_x < instance.period_x / 2, 0, -1)
        jump_z = np.where(tilde_z < instance.period_z / 2, 0, -1)
        oracle = NormSumObjective(
            tilde_x + jump_x * instance.period_x,
            instance.period_x,
            tilde_z + jump_z * instance.period_z,
            instance.period_z,
        )

        result = shift_step(instance, slots)

        assert -0.5 <= result.delta_x <= 0.5 and -0.5 <= result.delta_z <= 0.5
        assert result.objective == pytest.approx(oracle(result.delta_x, result.delta_z))
        assert result.objective <= float(oracle.on_grid(grid_x, grid_z).min()) + 1e-6


def test_settled_shift_step_never_exceeds_the_incumbent_and_is_a_fixed_point(reference_gs, rng):
    for _ in range(20):
        instance = _instance(rng, reference_gs)
        slots = rng.permutation(reference_gs.n_antennas)
        incumbent = (float(rng.uniform(-0.5, 0.5)), float(rng.uniform(-0.5, 0.5)))

        result = settled_shift_step(instance, slots, incumbent)
        point = (result.delta_x, result.delta_z)

        assert result.objective <= nearest_jump_travel(instance, slots, *incumbent) + 1e-9
        assert result.objective == pytest.approx(travel_objective(instance, slots, point))
        # one more frozen-jump pass from the settled shift finds nothing better
        again = shift_step(instance, slots, point)
        assert again.objective >= result.objective - 1e-6


def test_bcd_is_monotone_and_lands_in_the_optimal_set(reference_gs, rng):
    for _ in range(5):
        init = _box_swarm(rng)
        env = env_constants(reference_gs, init, REFERENCE_WAVELENGTH)

        solution = bcd_solve(init, env, reference_gs)

        history = np.asarray(solution.objective_history)
        assert np.all(np.diff(history) <= 1e-9)
        assert solution.iterations == len(solution.position_history) <= 5
        np.testing.assert_allclose(solution.final_positions.y, init.y)
        assert solution.objective == pytest.approx(history[-1])
        assert membership_test(solution.final_positions, env, reference_gs).member
        bound = travel_bound_centralized(env.eps(init), env)
        assert np.all(solution.per_uav_travel <= bound * (1 + 1e-9))


def test_bcd_accepts_partial_swarms(reference_gs, rng):
    init = _box_swarm(rng, n_uavs=5)
    env = env_constants(reference_gs, init, REFERENCE_WAVELENGTH)

    solution = bcd_solve(init, env, reference_gs)

    assert len(set(solution.slots.tolist())) == 5
    assert membership_test(solution.final_positions, env, reference_gs).member


def test_bcd_rejects_oversized_swarms_and_bad_limits(reference_gs, rng):
    init = _box_swarm(rng, n_uavs=13)
    env = env_constants(reference_gs, init, REFERENCE_WAVELENGTH)
    with pytest.raises(OptimizationError):
        bcd_solve(init, env, reference_gs)

    small = _box_swarm(rng)
    with pytest.raises(OptimizationError):
        bcd_solve(small, env_constants(reference_gs, small, REFERENCE_WAVELENGTH), reference_gs, max_iters=0)


def test_travel_bound_requires_positive_range_ratio(reference_env):
    assert travel_bound_centralized(1.0, reference_env) == pytest.approx(
        np.hypot(reference_env.s_x, reference_env.s_z) / 2
    )
    with pytest.raises(OptimizationError):
        travel_bound_centralized(0.0, reference_env)


def test_default_swarm_passes_the_default_far_field_check(caplog):
    scenario = build_scenario(ScenarioConfig(), seed=0)

    with caplog.at_level(logging.WARNING):
        bcd_solve(scenario.swarm, scenario.env, scenario.gs, far_field_threshold=get_settings().far_field_threshold)
    assert not [record for record in caplog.records if "far-field" in record.getMessage()]

    with caplog.at_level(logging.WARNING):
        bcd_solve(scenario.swarm, scenario.env, scenario.gs, far_field_threshold=0.05)
    assert any("far-field" in record.getMessage() for record in caplog.records)
