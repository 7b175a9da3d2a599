"""Injective UAV-to-slot assignment."""

from __future__ import annotations

from itertools import permutations

import numpy as np
from scipy.optimize import linear_sum_assignment

from core.exceptions import OptimizationError


def solve_assignment(cost: np.ndarray, exhaustive_limit: int = 0) -> np.ndarray:
    """Return the slot (column) for every UAV (row) minimizing the total cost.

    Rows must not outnumber columns. When the column count is at most
    ``exhaustive_limit`` every injection is enumerated and the lexicographically
    first optimum wins, i.e. ties go to the lowest slot index. Otherwise the
    Hungarian solver is used.
    """

    cost = np.asarray(cost, dtype=float)
    if cost.ndim != 2:
        raise OptimizationError(f"cost must be a matrix, got shape {cost.shape}")
    n_rows, n_cols = cost.shape
    if n_rows > n_cols:
        raise OptimizationError(f"{n_rows} UAVs cannot be assigned to {n_cols} slots")
    if not np.all(np.isfinite(cost)):
        raise OptimizationError("assignment costs must be finite")
    if n_rows == 0:
        return np.zeros(0, dtype=int)

    if n_cols <= exhaustive_limit:
        candidates = np.array(list(permutations(range(n_cols), n_rows)), dtype=int)
        totals = cost[np.arange(n_rows), candidates].sum(axis=1)
        return candidates[int(np.argmin(totals))]

    rows, cols = linear_sum_assignment(cost)
    slots = np.empty(n_rows, dtype=int)
    slots[rows] = cols
    return slots


def assignment_cost(cost: np.ndarray, slots: np.ndarray) -> float:
    return float(np.asarray(cost)[np.arange(len(slots)), slots].sum())
