"""Common-shift subproblem: minimize a sum of affine Euclidean norms over a box."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .relaxation import RelaxedInstance, nearest_jumps, selected_offsets

BOX = 0.5
WARM_START_POINTS = 41
SMOOTHING_SCHEDULE = (1.0, 1e-2, 1e-4, 1e-6, 1e-9)  # meters
MAX_STAGE_ITERS = 300
STEP_TOL = 1e-13
MAX_JUMP_REFRESHES = 20


@dataclass(frozen=True)
class ShiftResult:
    delta_x: float
    delta_z: float
    objective: float


class NormSumObjective:
    """F(δ) = Σ_n ‖(a_n + s_n δ_x, b_n + t_n δ_z)‖ with δ in [−½, ½]²."""

    def __init__(self, a: np.ndarray, s: np.ndarray, b: np.ndarray, t: np.ndarray):
        self.a = np.asarray(a, dtype=float)
        self.s = np.asarray(s, dtype=float)
        self.b = np.asarray(b, dtype=float)
        self.t = np.asarray(t, dtype=float)

    def __call__(self, delta_x: float, delta_z: float) -> float:
        return float(np.sum(np.hypot(self.a + self.s * delta_x, self.b + self.t * delta_z)))

    def on_grid(self, grid_x: np.ndarray, grid_z: np.ndarray) -> np.ndarray:
        rx = self.a[None, None, :] + self.s[None, None, :] * grid_x[:, :, None]
        rz = self.b[None, None, :] + self.t[None, None, :] * grid_z[:, :, None]
        return np.hypot(rx, rz).sum(axis=2)

    def apexes(self) -> np.ndarray:
        """Points where a single term vanishes, clipped to the box."""

        return np.clip(np.column_stack([-self.a / self.s, -self.b / self.t]), -BOX, BOX)

    def majorize_step(self, delta: np.ndarray, smoothing: float) -> np.ndarray:
        # the quadratic majorizer is separable, so the box projection is a clip
        rx = self.a + self.s * delta[0]
        rz = self.b + self.t * delta[1]
        weights = 1.0 / np.sqrt(rx**2 + rz**2 + smoothing**2)
        dx = -np.sum(weights * self.s * self.a) / np.sum(weights * self.s**2)
        dz = -np.sum(weights * self.t * self.b) / np.sum(weights * self.t**2)
        return np.clip(np.array([dx, dz]), -BOX, BOX)


def minimize_norm_sum(objective: NormSumObjective, incumbent: tuple[float, float] = (0.0, 0.0)) -> ShiftResult:
    """Dense-grid warm start, apex candidates, then projected majorize-minimize steps."""

    axis = np.linspace(-BOX, BOX, WARM_START_POINTS)
    grid_x, grid_z = np.meshgrid(axis, axis, indexing="ij")
    values = objective.on_grid(grid_x, grid_z)
    flat = int(np.argmin(values))
    candidates = [np.array([grid_x.flat[flat], grid_z.flat[flat]]), np.clip(np.asarray(incumbent, dtype=float), -BOX, BOX)]
    candidates.extend(objective.apexes())

    best = min(candidates, key=lambda point: objective(*point))
    best_value = objective(*best)

    current = best.copy()
    for smoothing in SMOOTHING_SCHEDULE:
        for _ in range(MAX_STAGE_ITERS):
            nxt = objective.majorize_step(current, smoothing)
            value = objective(*nxt)
            if value < best_value:
                best, best_value = nxt, value
            if np.max(np.abs(nxt - current)) < STEP_TOL:
                current = nxt
                break
            current = nxt

    best, best_value = _pattern_polish(objective, best, best_value)
    return ShiftResult(delta_x=float(best[0]), delta_z=float(best[1]), objective=best_value)


_DIRECTIONS = np.array([[1, 0], [-1, 0], [0, 1], [0, -1], [1, 1], [1, -1], [-1, 1], [-1, -1]], dtype=float)


def _pattern_polish(objective: NormSumObjective, point: np.ndarray, value: float) -> tuple[np.ndarray, float]:
    step = 1e-3
    while step > 1e-12:
        improved = False
        for direction in _DIRECTIONS:
            trial = np.clip(point + step * direction, -BOX, BOX)
            trial_value = objective(*trial)
            if trial_value < value:
                point, value, improved = trial, trial_value, True
                break
        if not improved:
            step /= 2.0
    return point, value


def shift_step(
    instance: RelaxedInstance,
    slots: np.ndarray,
    incumbent: tuple[float, float] = (0.0, 0.0),
) -> ShiftResult:
    """Optimal common shift for fixed slots, jumps frozen at the incumbent shift."""

    tilde_x, tilde_z = selected_offsets(instance, slots)
    period_x, period_z = instance.period_x, instance.period_z
    jump_x = nearest_jumps(tilde_x, incumbent[0], period_x)
    jump_z = nearest_jumps(tilde_z, incumbent[1], period_z)
    objective = NormSumObjective(
        a=tilde_x + jump_x * period_x,
        s=period_x,
        b=tilde_z + jump_z * period_z,
        t=period_z,
    )
    return minimize_norm_sum(objective, incumbent)


def nearest_jump_travel(
    instance: RelaxedInstance,
    slots: np.ndarray,
    delta_x: float | np.ndarray,
    delta_z: float | np.ndarray,
) -> float | np.ndarray:
    """Total travel with every UAV taking its nearest jump; broadcasts over shift grids."""

    tilde_x, tilde_z = selected_offsets(instance, slots)
    dx = np.asarray(delta_x, dtype=float)[..., None]
    dz = np.asarray(delta_z, dtype=float)[..., None]
    move_x = tilde_x + (nearest_jumps(tilde_x, dx, instance.period_x) + dx) * instance.period_x
    move_z = tilde_z + (nearest_jumps(tilde_z, dz, instance.period_z) + dz) * instance.period_z
    total = np.hypot(move_x, move_z).sum(axis=-1)
    return float(total) if total.ndim == 0 else total


def _jump_pattern(instance: RelaxedInstance, slots: np.ndarray, delta: tuple[float, float]) -> np.ndarray:
    tilde_x, tilde_z = selected_offsets(instance, slots)
    return np.column_stack(
        [
            nearest_jumps(tilde_x, delta[0], instance.period_x),
            nearest_jumps(tilde_z, delta[1], instance.period_z),
        ]
    )


def _settle_jumps(instance: RelaxedInstance, slots: np.ndarray, start: tuple[float, float]) -> ShiftResult:
    point = (float(start[0]), float(start[1]))
    for _ in range(MAX_JUMP_REFRESHES):
        frozen = _jump_pattern(instance, slots, point)
        result = shift_step(instance, slots, point)
        point = (result.delta_x, result.delta_z)
        if np.array_equal(_jump_pattern(instance, slots, point), frozen):
            break
    return ShiftResult(delta_x=point[0], delta_z=point[1], objective=nearest_jump_travel(instance, slots, *point))


def settled_shift_step(
    instance: RelaxedInstance,
    slots: np.ndarray,
    incumbent: tuple[float, float] = (0.0, 0.0),
) -> ShiftResult:
    """Shift step repeated with refreshed jumps until the jump pattern stops changing.

    Two starts are settled: the incumbent and the best point of a grid over the
    nearest-jump travel. Each pass cannot increase the travel, so the returned
    objective never exceeds the incumbent's.
    """

    axis = np.linspace(-BOX, BOX, WARM_START_POINTS)
    grid_x, grid_z = np.meshgrid(axis, axis, indexing="ij")
    flat = int(np.argmin(nearest_jump_travel(instance, slots, grid_x, grid_z)))
    starts = [incumbent, (float(grid_x.flat[flat]), float(grid_z.flat[flat]))]
    return min((_settle_jumps(instance, slots, start) for start in starts), key=lambda result: result.objective)
