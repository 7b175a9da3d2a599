"""Shared core models, constants, and exceptions."""

from . import constants
from .models import (
    BCDConfig,
    BudgetConfig,
    DisturbanceConfig,
    FFConfig,
    GroundArrayConfig,
    IterationRow,
    LinkBudget,
    MonteCarloAggregate,
    ScenarioConfig,
    SweepPoint,
    TrialReport,
    TrialSummary,
)
from .exceptions import (
    ChannelError,
    ConfigurationError,
    FormationError,
    GeometryError,
    OptimizationError,
    PlacementError,
    ReportError,
    SimulationError,
)

__all__ = [
    "BCDConfig",
    "BudgetConfig",
    "DisturbanceConfig",
    "FFConfig",
    "GroundArrayConfig",
    "IterationRow",
    "LinkBudget",
    "MonteCarloAggregate",
    "ScenarioConfig",
    "SweepPoint",
    "TrialReport",
    "TrialSummary",
    "ChannelError",
    "ConfigurationError",
    "FormationError",
    "GeometryError",
    "OptimizationError",
    "PlacementError",
    "ReportError",
    "SimulationError",
    "constants",
]
