"""End-to-end behavior of the placement methods over a few seeded trials."""

from __future__ import annotations

import math

import numpy as np
import pytest

from core.models import DisturbanceConfig, FFConfig, ScenarioConfig
from force_field.simulation import run_force_field, travel_bound_ff
from optimizers.bcd import bcd_solve, travel_bound_centralized
from services.monte_carlo_service import sweep_config
from services.scenario_service import build_scenario, load_preset
from services.trial_service import run_trial

SEEDS = (0, 1, 2)


def _mean(cfg: ScenarioConfig, field: str, seeds=SEEDS) -> float:
    return float(np.mean([getattr(run_trial(cfg, seed).summary, field) for seed in seeds]))


@pytest.mark.integration
def test_sum_rate_grows_with_the_array_like_the_bound():
    base = ScenarioConfig(method="centralized")
    small = sweep_config(base, "m_x", 2)
    large = sweep_config(base, "m_x", 6)

    rate_ratio = _mean(large, "final_sum_rate") / _mean(small, "final_sum_rate")
    bound_ratio = _mean(large, "final_bound") / _mean(small, "final_bound")

    assert rate_ratio == pytest.approx(bound_ratio, rel=0.03)
    assert rate_ratio > 2.5


@pytest.mark.integration
@pytest.mark.parametrize("seed", SEEDS)
def test_centralized_beats_the_initial_placement(seed):
    init = run_trial(ScenarioConfig(method="init"), seed)
    cent = run_trial(ScenarioConfig(method="centralized"), seed)

    assert init.summary.final_sum_rate < cent.summary.final_sum_rate


@pytest.mark.integration
def test_ura_travels_several_times_farther_than_centralized():
    ura = _mean(ScenarioConfig(method="ura"), "mean_travel", seeds=range(5))
    cent = _mean(ScenarioConfig(method="centralized"), "mean_travel", seeds=range(5))

    assert ura / cent >= 3.0


@pytest.mark.integration
def test_travel_scales_linearly_with_range():
    cube = load_preset("distance_sweep").model_copy(update={"method": "centralized"})
    near = sweep_config(cube, "roi_distance", 1000.0)
    far = sweep_config(cube, "roi_distance", 4000.0)

    ratio = _mean(far, "mean_travel", seeds=range(5)) / _mean(near, "mean_travel", seeds=range(5))

    assert 4.0 * 0.75 <= ratio <= 4.0 * 1.25


@pytest.mark.integration
@pytest.mark.parametrize("seed", SEEDS)
def test_ideal_force_field_reaches_the_bound_with_a_still_anchor(seed):
    report = run_trial(ScenarioConfig(method="force_field"), seed)

    assert report.summary.final_sum_rate >= 0.99 * report.summary.final_bound
    assert min(report.per_uav_travel) == 0.0


@pytest.mark.integration
@pytest.mark.parametrize("seed", SEEDS)
def test_travel_stays_under_the_analytic_bounds(seed):
    cfg = load_preset("distance_sweep")
    scenario = build_scenario(cfg, seed)
    eps = scenario.env.eps(scenario.swarm)

    cent = run_trial(cfg.model_copy(update={"method": "centralized"}), seed)
    trajectory = run_force_field(scenario.swarm, scenario.gs, scenario.env, FFConfig())
    eps_anchor = eps[trajectory.anchor().uav_index]

    assert np.all(np.asarray(cent.per_uav_travel) <= travel_bound_centralized(eps, scenario.env) * (1 + 1e-9))
    assert np.all(trajectory.cumulative_travel <= travel_bound_ff(eps_anchor, eps, scenario.env) * (1 + 1e-9))


@pytest.mark.integration
def test_strong_los_keeps_centralized_near_the_bound():
    cfg = ScenarioConfig(method="centralized", disturbances=DisturbanceConfig(rician_k_db=40.0))

    assert _mean(cfg, "final_sum_rate") >= 0.95 * _mean(cfg, "final_bound")


@pytest.mark.integration
def test_disturbed_centralized_rate_drops_below_the_ideal():
    ideal = _mean(ScenarioConfig(method="centralized"), "final_sum_rate")
    disturbed = _mean(load_preset("disturbed").model_copy(update={"method": "centralized"}), "final_sum_rate")

    assert disturbed < ideal


@pytest.mark.integration
def test_centralized_settles_within_five_iterations_on_almost_every_seed():
    cfg = ScenarioConfig()
    converged = 0
    for seed in range(100):
        scenario = build_scenario(cfg, seed)
        solution = bcd_solve(scenario.swarm, scenario.env, scenario.gs, max_iters=5)

        assert np.all(np.diff(solution.objective_history) <= 1e-9)
        converged += solution.converged

    assert converged >= 95


@pytest.mark.integration
@pytest.mark.parametrize("k_db", [-10.0, -5.0])
def test_weak_los_makes_placement_irrelevant(k_db):
    disturbances = DisturbanceConfig(rician_k_db=k_db)
    init = _mean(ScenarioConfig(method="init", disturbances=disturbances), "final_sum_rate", seeds=range(10))
    cent = _mean(ScenarioConfig(method="centralized", disturbances=disturbances), "final_sum_rate", seeds=range(10))

    assert abs(cent - init) / init <= 0.10


@pytest.mark.integration
def test_force_field_state_steps_stay_unambiguous_and_settle_outward_from_the_anchor():
    near, everyone = [], []
    for seed in range(5):
        scenario = build_scenario(ScenarioConfig(), seed)
        trajectory = run_force_field(scenario.swarm, scenario.gs, scenario.env, FFConfig())

        assert trajectory.converged
        assert max(trajectory.max_state_steps) < math.pi
        for agent in trajectory.agents:
            if agent.is_anchor:
                continue
            settled = trajectory.convergence_round[agent.uav_index]
            assert settled is not None
            everyone.append(settled)
            if sum(agent.grid_index) == 1:
                near.append(settled)

    assert np.mean(near) <= np.mean(everyone)


@pytest.mark.integration
def test_disturbed_force_field_tracks_disturbed_centralized():
    disturbed = load_preset("disturbed")
    seeds = range(10)
    ideal = _mean(ScenarioConfig(method="centralized"), "final_sum_rate", seeds)
    cent = _mean(disturbed.model_copy(update={"method": "centralized"}), "final_sum_rate", seeds)
    ff = _mean(disturbed.model_copy(update={"method": "force_field"}), "final_sum_rate", seeds)

    assert disturbed.ff.iterations == 50
    assert ff >= 0.9 * cent
    assert 0.10 <= 1 - cent / ideal <= 0.25


@pytest.mark.integration
def test_massive_arrays_keep_most_of_the_placement_gain():
    base = load_preset("massive_mimo")
    seeds = range(5)

    def gap(n_antennas: int) -> float:
        cfg = sweep_config(base, "n_antennas", n_antennas)
        cent = _mean(cfg.model_copy(update={"method": "centralized"}), "final_sum_rate", seeds)
        init = _mean(cfg.model_copy(update={"method": "init"}), "final_sum_rate", seeds)
        return cent - init

    assert gap(128) >= 0.5 * gap(16)
