"""Geometry, environment constants and channel generation."""

from .disturbances import (
    ChannelRealization,
    apply_shadowing,
    disturbed_channel,
    estimate_channel,
    perturb_positions,
    receive_snr,
    rician_channel,
)
from .geometry import (
    EnvConstants,
    FarFieldReport,
    GroundArray,
    SwarmState,
    env_constants,
    far_field_report,
    gs_frame_to_world,
    scenario_to_gs_frame,
)
from .los import ChannelMatrix, distance_matrix, los_channel
from .phases import far_field_phase_differences, phase_differences, wrap_phase, wrap_symmetric
from .streams import RandomStreams

__all__ = [
    "ChannelMatrix",
    "ChannelRealization",
    "EnvConstants",
    "FarFieldReport",
    "GroundArray",
    "RandomStreams",
    "SwarmState",
    "apply_shadowing",
    "disturbed_channel",
    "distance_matrix",
    "env_constants",
    "estimate_channel",
    "far_field_phase_differences",
    "far_field_report",
    "gs_frame_to_world",
    "los_channel",
    "perturb_positions",
    "phase_differences",
    "receive_snr",
    "rician_channel",
    "scenario_to_gs_frame",
    "wrap_phase",
    "wrap_symmetric",
]
