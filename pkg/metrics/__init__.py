"""Capacity, orthogonality and linear-receiver rate metrics."""

from .lmmse import (
    RateReport,
    UplinkDesign,
    lmmse_combiners,
    lmmse_sum_rate,
    matched_filter_sum_rate,
    uplink_linear_design,
)
from .rates import capacity, gram_orthogonality_residual, single_user_bound

__all__ = [
    "RateReport",
    "UplinkDesign",
    "capacity",
    "gram_orthogonality_residual",
    "lmmse_combiners",
    "lmmse_sum_rate",
    "matched_filter_sum_rate",
    "single_user_bound",
    "uplink_linear_design",
]
