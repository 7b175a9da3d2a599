"""Orthogonal placement set: construction, membership and the URA baseline."""

from .assignment import assignment_cost, solve_assignment
from .membership import MembershipReport, membership_test
from .optimal_set import (
    PlacementParams,
    apply_integer_jumps,
    apply_scaled_shift,
    construct_placement,
    lemma1_grid,
    orthogonal_grid,
    slot_positions,
)
from .ura_baseline import ura_baseline

__all__ = [
    "MembershipReport",
    "PlacementParams",
    "apply_integer_jumps",
    "apply_scaled_shift",
    "assignment_cost",
    "construct_placement",
    "lemma1_grid",
    "membership_test",
    "orthogonal_grid",
    "slot_positions",
    "solve_assignment",
    "ura_baseline",
]
