"""Pydantic models shared across the simulator (configs and reports)."""

from __future__ import annotations

import math
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core import constants


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def dbm_to_watts(value_dbm: float) -> float:
    return 10.0 ** ((value_dbm - 30.0) / 10.0)


class LinkBudget(BaseModel):
    """Transmit power and receiver noise of the backhaul uplink (SI units)."""

    model_config = ConfigDict(frozen=True)

    tx_power: float = Field(gt=0)  # W
    noise_psd: float = Field(gt=0)  # W/Hz
    bandwidth: float = Field(gt=0)  # Hz
    noise_figure: float = Field(ge=1.0)  # linear

    @property
    def noise_power(self) -> float:
        return self.noise_psd * self.bandwidth * self.noise_figure

    @property
    def rho(self) -> float:
        """Transmit SNR P_T / noise power."""

        return self.tx_power / self.noise_power

    @classmethod
    def from_db(
        cls,
        tx_power_dbm: float = constants.DEFAULT_TX_POWER_DBM,
        noise_psd_dbm_hz: float = constants.DEFAULT_NOISE_PSD_DBM_HZ,
        bandwidth_hz: float = constants.DEFAULT_BANDWIDTH_HZ,
        noise_figure_db: float = constants.DEFAULT_NOISE_FIGURE_DB,
    ) -> "LinkBudget":
        return cls(
            tx_power=dbm_to_watts(tx_power_dbm),
            noise_psd=dbm_to_watts(noise_psd_dbm_hz),
            bandwidth=bandwidth_hz,
            noise_figure=db_to_linear(noise_figure_db),
        )


class BudgetConfig(BaseModel):
    """Link budget as it appears in a scenario file (dB units)."""

    model_config = ConfigDict(extra="forbid")

    tx_power_dbm: float = constants.DEFAULT_TX_POWER_DBM
    noise_psd_dbm_hz: float = constants.DEFAULT_NOISE_PSD_DBM_HZ
    bandwidth_hz: float = Field(default=constants.DEFAULT_BANDWIDTH_HZ, gt=0)
    noise_figure_db: float = Field(default=constants.DEFAULT_NOISE_FIGURE_DB, ge=0)

    def to_link_budget(self) -> LinkBudget:
        return LinkBudget.from_db(
            self.tx_power_dbm, self.noise_psd_dbm_hz, self.bandwidth_hz, self.noise_figure_db
        )


class DisturbanceConfig(BaseModel):
    """Channel and motion impairments applied on top of the exact LOS channel."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    rician_k_db: Optional[float] = None  # None = pure LOS (K = +inf)
    shadowing_sigma_db: float = Field(default=0.0, ge=0)
    estimation_error: bool = False
    est_training_symbols: int = Field(default=constants.DEFAULT_TRAINING_SYMBOLS, ge=0)
    motion_sigma: float = Field(default=0.0, ge=0)  # m
    rng_seed: int = 0

    @property
    def rician_k(self) -> float:
        if self.rician_k_db is None:
            return math.inf
        return db_to_linear(self.rician_k_db)

    @property
    def perfect_estimation(self) -> bool:
        # zero training symbols means the receiver knows the channel
        return not self.estimation_error or self.est_training_symbols == 0


class FFConfig(BaseModel):
    """Force Field controller settings."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    k_p: Optional[float] = Field(default=None, gt=0)  # m/rad; None = kp_scale * gate
    kp_scale: float = Field(default=constants.DEFAULT_KP_SCALE, gt=0)
    iterations: int = Field(default=constants.DEFAULT_FF_ITERATIONS, ge=1)
    stall_threshold: Optional[float] = Field(default=None, gt=0)  # m
    sinr_target_db: Optional[float] = None
    phase_model: Literal["exact", "far_field"] = "exact"


class BCDConfig(BaseModel):
    """Block coordinate descent settings for the centralized solver."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    tol: float = Field(default=constants.DEFAULT_BCD_TOL, gt=0)
    max_iters: int = Field(default=constants.DEFAULT_BCD_MAX_ITERS, ge=1)


class GroundArrayConfig(BaseModel):
    """Ground station URA; element spacing defaults to aperture / element count."""

    model_config = ConfigDict(extra="forbid")

    m_x: int = Field(default=constants.DEFAULT_M_X, ge=1)
    m_z: int = Field(default=constants.DEFAULT_M_Z, ge=1)
    aperture_x: float = Field(default=constants.DEFAULT_APERTURE_X, gt=0)
    aperture_z: float = Field(default=constants.DEFAULT_APERTURE_Z, gt=0)
    d_x: Optional[float] = Field(default=None, gt=0)
    d_z: Optional[float] = Field(default=None, gt=0)
    elevation_tilt: float = constants.DEFAULT_ELEVATION_TILT
    base_height: float = constants.DEFAULT_BASE_HEIGHT

    @property
    def spacing_x(self) -> float:
        return self.d_x if self.d_x is not None else self.aperture_x / self.m_x

    @property
    def spacing_z(self) -> float:
        return self.d_z if self.d_z is not None else self.aperture_z / self.m_z


class ScenarioConfig(BaseModel):
    """Flat JSON experiment description; defaults reproduce the reference scenario."""

    model_config = ConfigDict(extra="forbid")

    name: str = "default"
    frequency_hz: float = Field(default=constants.DEFAULT_FREQUENCY_HZ, gt=0)
    ground_array: GroundArrayConfig = Field(default_factory=GroundArrayConfig)
    roi_distance: float = Field(default=constants.DEFAULT_ROI_DISTANCE, gt=0)
    box: Tuple[float, float, float] = constants.DEFAULT_BOX
    n_uavs: int = Field(default=constants.DEFAULT_N_UAVS, ge=1)
    budget: BudgetConfig = Field(default_factory=BudgetConfig)
    disturbances: DisturbanceConfig = Field(default_factory=DisturbanceConfig)
    seeds: List[int] = Field(default_factory=lambda: [0])
    method: Literal["init", "ura", "centralized", "force_field"] = "centralized"
    ff: FFConfig = Field(default_factory=FFConfig)
    bcd: BCDConfig = Field(default_factory=BCDConfig)

    @field_validator("box")
    @classmethod
    def _box_non_negative(cls, value: Tuple[float, float, float]) -> Tuple[float, float, float]:
        if any(side < 0 for side in value):
            raise ValueError("box sides must be non-negative")
        return value

    @model_validator(mode="after")
    def _uavs_fit_array(self) -> "ScenarioConfig":
        antennas = self.ground_array.m_x * self.ground_array.m_z
        if self.n_uavs > antennas:
            raise ValueError(
                f"n_uavs={self.n_uavs} exceeds the {antennas} ground antennas"
            )
        return self

    @property
    def wavelength(self) -> float:
        return constants.SPEED_OF_LIGHT / self.frequency_hz


class IterationRow(BaseModel):
    """One row of a trial trajectory."""

    iteration: int
    sum_rate: float
    capacity: float
    bound: float
    gram_residual: float
    mean_travel: float
    max_travel: float


class TrialSummary(BaseModel):
    """Final metrics of a trial."""

    final_sum_rate: float
    final_capacity: float
    final_bound: float
    final_gram_residual: float
    mean_travel: float
    max_travel: float
    total_travel: float
    converged: bool
    iterations: int
    wall_time_s: float


class TrialReport(BaseModel):
    """Complete outcome of a single seeded trial."""

    seed: int
    method: str
    config: ScenarioConfig
    rows: List[IterationRow] = Field(default_factory=list)
    per_uav_travel: List[float] = Field(default_factory=list)
    summary: TrialSummary


class MonteCarloAggregate(BaseModel):
    """Statistics of final trial metrics over seeds."""

    method: str
    n_trials: int
    n_failed: int = 0
    metrics: Dict[str, Dict[str, float]] = Field(default_factory=dict)
    failures: List[Dict[str, str]] = Field(default_factory=list)


class SweepPoint(BaseModel):
    """Aggregate for one value of a swept parameter."""

    parameter: str
    value: float
    aggregate: MonteCarloAggregate
