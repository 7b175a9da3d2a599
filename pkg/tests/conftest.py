"""Shared pytest fixtures for the UAV backhaul simulator tests."""

from __future__ import annotations

from typing import Generator

import numpy as np
import pytest

from channel.geometry import EnvConstants, GroundArray, SwarmState, env_constants
from config import get_settings
from core import constants
from core.models import LinkBudget

REFERENCE_RANGE = 2000.0
REFERENCE_WAVELENGTH = constants.SPEED_OF_LIGHT / constants.DEFAULT_FREQUENCY_HZ
SHORT_WAVELENGTH = 0.003


def make_env(gs: GroundArray, wavelength: float, range_r: float = REFERENCE_RANGE) -> EnvConstants:
    return env_constants(gs, SwarmState(np.array([[0.0, range_r, 0.0]])), wavelength)


@pytest.fixture(autouse=True)
def isolated_settings() -> Generator[None, None, None]:
    """Fresh settings per test, so environment overrides never leak."""

    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def reference_gs() -> GroundArray:
    """6 x 2 array with 6 m apertures (d_x = 1 m, d_z = 3 m), untilted."""

    return GroundArray(m_x=6, m_z=2, d_x=1.0, d_z=3.0)


@pytest.fixture
def reference_env(reference_gs) -> EnvConstants:
    return make_env(reference_gs, REFERENCE_WAVELENGTH)


@pytest.fixture
def short_wave_env(reference_gs) -> EnvConstants:
    """Same array at a short wavelength; lattice offsets stay far below the range."""

    return make_env(reference_gs, SHORT_WAVELENGTH)


@pytest.fixture
def budget() -> LinkBudget:
    return LinkBudget.from_db()


@pytest.fixture
def unit_budget() -> LinkBudget:
    """P_T = σ² = 1, so rho = 1."""

    return LinkBudget(tx_power=1.0, noise_psd=1.0, bandwidth=1.0, noise_figure=1.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
