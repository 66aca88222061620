"""Benchmark objective functions and decision-space bookkeeping.

Three maximization test functions ship with the domains and known optima used
by the reference experiments: Schwefel problem 2.26 (any dimension), an
offset Rastrigin variant with each per-coordinate term squared (2-D only),
and the SGO quartic (2-D only). Every evaluation routed through an
:class:`ObjectiveSpec` bumps its counter by exactly one per point, so total
function-call budgets can be audited in one place.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "DecisionSpace",
    "ObjectiveKind",
    "ObjectiveSpec",
    "make_objective",
    "schwefel226",
    "rastrigin_offset",
    "sgo",
    "SCHWEFEL_MAX_PER_DIM",
    "SCHWEFEL_ARGMAX_COORD",
]

# Known optima for the shipped benchmarks.
SCHWEFEL_MAX_PER_DIM = 418.9829
SCHWEFEL_ARGMAX_COORD = 420.9687
RASTRIGIN_OFFSET_MAX = 10.123
RASTRIGIN_OFFSET_ARGMAX = (-1.25, 3.25)
SGO_MAX = 130.8323226
SGO_ARGMAX = (-2.8362075, -2.8362075)


@dataclass
class DecisionSpace:
    """Bounded hyperrectangle the search runs over."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        self.lower = np.asarray(self.lower, dtype=float)
        self.upper = np.asarray(self.upper, dtype=float)
        if self.lower.ndim != 1 or self.lower.shape != self.upper.shape:
            raise ValueError("lower and upper must be 1-D arrays of equal length")
        if not np.all(self.lower < self.upper):
            raise ValueError("every lower bound must lie strictly below its upper bound")

    @property
    def n_dims(self) -> int:
        return self.lower.size

    @property
    def diag_length(self) -> float:
        """Euclidean length of the principal diagonal (normalizes probe spread)."""
        return float(np.sqrt(np.sum((self.upper - self.lower) ** 2)))

    @classmethod
    def cube(cls, n_dims: int, lower: float, upper: float) -> "DecisionSpace":
        return cls(np.full(n_dims, float(lower)), np.full(n_dims, float(upper)))


def schwefel226(x):
    """Schwefel problem 2.26 fitness: sum of x_i * sin(sqrt(|x_i|)).

    Accepts a single point (shape ``(n,)``) or a batch (shape ``(m, n)``) and
    reduces over the last axis. Single global maximum of 418.9829 per
    dimension at 420.9687 repeated.
    """
    x = np.asarray(x, dtype=float)
    return (x * np.sin(np.sqrt(np.abs(x)))).sum(axis=-1)


def rastrigin_offset(x):
    """Offset Rastrigin variant with each per-coordinate term squared.

    Maximum is 10.123 at (-1.25, 3.25). The outer square on each term is
    deliberate and differs from the textbook Rastrigin function; see README.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 2:
        raise ValueError("rastrigin_offset is defined for 2-D points only")
    y = x - np.array(RASTRIGIN_OFFSET_ARGMAX)
    terms = (y * y - 10.0 * np.cos(2.0 * np.pi * y) + 10.0) ** 2
    return RASTRIGIN_OFFSET_MAX - terms.sum(axis=-1)


def sgo(x):
    """SGO quartic test function; maximum ~130.8323226 near (-2.8362075, -2.8362075)."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 2:
        raise ValueError("sgo is defined for 2-D points only")
    t = x**4 - 16.0 * x**2 + 0.5 * x
    return -t.sum(axis=-1)


class ObjectiveKind(str, Enum):
    SCHWEFEL226 = "schwefel226"
    RASTRIGIN_OFFSET = "rastrigin_offset"
    SGO = "sgo"


_FUNCTIONS = {
    ObjectiveKind.SCHWEFEL226: schwefel226,
    ObjectiveKind.RASTRIGIN_OFFSET: rastrigin_offset,
    ObjectiveKind.SGO: sgo,
}

_TWO_D_ONLY = (ObjectiveKind.RASTRIGIN_OFFSET, ObjectiveKind.SGO)


@dataclass
class ObjectiveSpec:
    """A benchmark function bound to its decision space, with call accounting.

    ``eval_count`` grows by exactly one per evaluated point, batched or not.
    One instance must not be shared across concurrent runs.
    """

    kind: ObjectiveKind
    space: DecisionSpace
    known_max_value: float | None = None
    known_max_location: np.ndarray | None = None
    eval_count: int = 0

    def __post_init__(self):
        self.kind = ObjectiveKind(self.kind)
        if self.kind in _TWO_D_ONLY and self.space.n_dims != 2:
            raise ValueError(f"{self.kind.value} requires a 2-D decision space")
        if self.known_max_location is not None:
            self.known_max_location = np.asarray(self.known_max_location, dtype=float)

    def evaluate(self, x) -> float:
        """Raw fitness of one point; increments the call counter by 1."""
        self.eval_count += 1
        return float(_FUNCTIONS[self.kind](x))

    def evaluate_batch(self, points: np.ndarray) -> np.ndarray:
        """Raw fitness of an ``(m, n)`` batch; increments the counter by m."""
        points = np.asarray(points, dtype=float)
        self.eval_count += points.shape[0]
        return np.asarray(_FUNCTIONS[self.kind](points), dtype=float)


_DEFAULT_BOUNDS = {
    ObjectiveKind.SCHWEFEL226: (-500.0, 500.0),
    ObjectiveKind.RASTRIGIN_OFFSET: (-5.12, 5.12),
    ObjectiveKind.SGO: (-50.0, 50.0),
}


def make_objective(kind: ObjectiveKind | str, n_dims: int | None = None) -> ObjectiveSpec:
    """Build an ObjectiveSpec on the benchmark's standard domain.

    ``n_dims`` applies to Schwefel 2.26 only (default 2); the other two
    functions are fixed at two dimensions.
    """
    kind = ObjectiveKind(kind)
    if kind in _TWO_D_ONLY:
        if n_dims not in (None, 2):
            raise ValueError(f"{kind.value} requires n_dims = 2")
        n_dims = 2
    elif n_dims is None:
        n_dims = 2
    lo, hi = _DEFAULT_BOUNDS[kind]
    space = DecisionSpace.cube(n_dims, lo, hi)
    if kind is ObjectiveKind.SCHWEFEL226:
        known_value = SCHWEFEL_MAX_PER_DIM * n_dims
        known_loc = np.full(n_dims, SCHWEFEL_ARGMAX_COORD)
    elif kind is ObjectiveKind.RASTRIGIN_OFFSET:
        known_value = RASTRIGIN_OFFSET_MAX
        known_loc = np.array(RASTRIGIN_OFFSET_ARGMAX)
    else:
        known_value = SGO_MAX
        known_loc = np.array(SGO_ARGMAX)
    return ObjectiveSpec(kind=kind, space=space, known_max_value=known_value,
                         known_max_location=known_loc)
