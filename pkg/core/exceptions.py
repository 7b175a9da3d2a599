"""Custom exception hierarchy for simulation errors."""


class SimulationError(Exception):
    """Base application error."""


class GeometryError(SimulationError):
    """Raised when array or swarm geometry is invalid."""


class ChannelError(SimulationError):
    """Raised when a channel cannot be built or disturbed."""


class PlacementError(SimulationError):
    """Raised when placement parameters do not fit the swarm."""


class OptimizationError(SimulationError):
    """Raised when the centralized solver receives an invalid problem."""


class FormationError(SimulationError):
    """Raised when the Force Field formation cannot be built."""


class ConfigurationError(SimulationError):
    """Raised when a scenario configuration is inconsistent."""


class ReportError(SimulationError):
    """Raised when a report cannot be written or read."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message if path is None else f"{message} (path: {path})")
        self.path = path
