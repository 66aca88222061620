"""Fitness floor: the thresholded objective and its update schedules.

The floor replaces every fitness below the current threshold T with T itself,
removing local maxima from the searchable landscape while leaving everything
above T untouched. Two schedules are shipped: a linear ramp over the observed
fitness range (the default) and a follow-the-best-fitness rule.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "LinearRamp",
    "BestFitness",
    "ThresholdState",
    "unit_step",
    "apply_threshold",
    "update_threshold_linear",
    "update_threshold_best_fitness",
    "BEST_SENTINEL",
    "WORST_SENTINEL",
]

# Any real fitness replaces these on the first >= / <= comparison.
BEST_SENTINEL = -1e300
WORST_SENTINEL = 1e300


@dataclass
class LinearRamp:
    """Threshold rises linearly with completed passes, capped at c_th of the range."""

    c_th: float
    num_passes: int

    def __post_init__(self):
        if not 0.0 < self.c_th <= 1.0:
            raise ValueError("c_th must lie in (0, 1]")
        if self.num_passes < 1:
            raise ValueError("num_passes must be a positive integer")


@dataclass
class BestFitness:
    """Each new threshold is the best fitness the completed pass returned."""


Schedule = LinearRamp | BestFitness


@dataclass
class ThresholdState:
    """Mutable floor state owned by a single run.

    ``enabled`` stays false during the first pass so the initial search sees
    the raw landscape. ``f_star`` and ``f_min`` track the best and worst
    fitness observed over all passes so far.
    """

    schedule: Schedule
    enabled: bool = False
    t_current: float = BEST_SENTINEL
    f_star: float = BEST_SENTINEL
    f_min: float = WORST_SENTINEL


def unit_step(z: float) -> int:
    """1 for z >= 0, else 0."""
    return 1 if z >= 0 else 0


def apply_threshold(f_val, state: ThresholdState):
    """Floor a fitness value (scalar or array) at the active threshold.

    Disabled states pass the value through unchanged. Enabled states return
    (f - T) * U(f - T) + T, which reduces branch-by-branch to max(f, T); the
    max form keeps the identity exact in floating point.
    """
    if not state.enabled:
        return f_val
    return np.maximum(f_val, state.t_current)


def update_threshold_linear(k: int, state: ThresholdState) -> float:
    """Threshold after completed pass k: F_min + (c_th * k / P) * (F* - F_min).

    The returned value governs pass k + 1. Requires at least one completed
    pass so that f_star and f_min hold real fitnesses.
    """
    sched = state.schedule
    if not isinstance(sched, LinearRamp):
        raise TypeError("linear update requires a LinearRamp schedule")
    if k < 1:
        raise ValueError("pass index k must be >= 1")
    if state.f_star == BEST_SENTINEL or state.f_min == WORST_SENTINEL:
        raise RuntimeError("threshold update before any completed pass")
    fraction = sched.c_th * k / sched.num_passes
    return state.f_min + fraction * (state.f_star - state.f_min)


def update_threshold_best_fitness(g_star_k: float) -> float:
    """Schedule that pins the next threshold at the completed pass's best fitness."""
    return g_star_k
