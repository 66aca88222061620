"""Quasirandom floor sampling: how much of the landscape a threshold flattened.

A deterministic Halton sequence samples the decision space; the fraction of
samples landing on the floor (within a small margin of the threshold) turns
into the estimate p_above = 1 - n_on_floor / n_samples of the probability
that a sample falls inside the projections of the surviving peaks. As the
threshold rises toward the global maximum this estimate drops to zero.

Sampling here is standalone and never touches the call counter of a running
experiment: pass the plain objective function, not a counting wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .objectives import DecisionSpace

__all__ = ["FloorStats", "halton_point", "halton_points", "sample_threshold_floor"]

DEFAULT_FLOOR_MARGIN = 0.005


def _first_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes):
            primes.append(candidate)
        candidate += 1
    return primes


def _radical_inverse(indices: np.ndarray, base: int) -> np.ndarray:
    """Digit-reversed fraction of each index in the given base."""
    remaining = np.array(indices, dtype=np.int64, copy=True)
    out = np.zeros(remaining.shape, dtype=float)
    scale = 1.0 / base
    while np.any(remaining > 0):
        remaining, digit = np.divmod(remaining, base)
        out += digit * scale
        scale /= base
    return out


def halton_point(index: int, n_dims: int) -> np.ndarray:
    """Halton point for one index: radical inverse in the first n_dims prime bases."""
    if index < 0:
        raise ValueError("index must be >= 0")
    bases = _first_primes(n_dims)
    idx = np.array([index])
    return np.array([_radical_inverse(idx, b)[0] for b in bases])


def halton_points(n_points: int, n_dims: int, start: int = 0) -> np.ndarray:
    """Halton points for indices start..start+n_points-1, shape (n_points, n_dims)."""
    indices = np.arange(start, start + n_points)
    bases = _first_primes(n_dims)
    return np.column_stack([_radical_inverse(indices, b) for b in bases])


@dataclass
class FloorStats:
    n_samples: int
    n_on_floor: int
    p_above: float  # 1 - n_on_floor / n_samples
    threshold_used: float
    on_floor_margin: float


def sample_threshold_floor(
    func: Callable[[np.ndarray], np.ndarray],
    space: DecisionSpace,
    threshold: float,
    n_samples: int,
    margin: float = DEFAULT_FLOOR_MARGIN,
) -> FloorStats:
    """Estimate the above-floor fraction of a thresholded landscape.

    Maps ``n_samples`` Halton points affinely into the decision space,
    evaluates the floored fitness g = max(f, T) at each, and counts a sample
    as on-floor when g - T <= margin. ``func`` must accept an (m, n) batch
    and return m fitnesses.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    unit = halton_points(n_samples, space.n_dims)
    points = space.lower + unit * (space.upper - space.lower)
    g = np.maximum(np.asarray(func(points), dtype=float), threshold)
    n_on_floor = int(np.count_nonzero(g - threshold <= margin))
    return FloorStats(
        n_samples=n_samples,
        n_on_floor=n_on_floor,
        p_above=1.0 - n_on_floor / n_samples,
        threshold_used=threshold,
        on_floor_margin=margin,
    )
