"""Simplified parameter-free central force optimization.

Probes accelerate under a gravity-like pull toward higher-fitness probes.
The full position/acceleration/fitness history of a run is kept because the
best/worst scans range over every time step, not just the last one. A run is
strictly sequential; with a probe-line start there is no randomness at all.

The update cycle per time step: move probes ballistically from the previous
step's accelerations, pull coordinates that left the domain back inside
(scaled by the cycling retrieval factor), evaluate fitness (floored when a
threshold is active), then recompute accelerations from the new fitness
field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .objectives import DecisionSpace
from .threshold import ThresholdState, apply_threshold

__all__ = [
    "ProbeLine",
    "RandomUniform",
    "CfoParams",
    "SwarmHistory",
    "OptResult",
    "probe_line_ipd",
    "random_ipd",
    "step_positions",
    "retrieve_errant",
    "compute_accelerations",
    "cycle_frep",
    "scan_best",
    "scan_worst",
    "reposition_floor_probes",
    "run_cfo",
    "FLOOR_MARGIN",
    "MAX_REPOSITION_TRIES",
]

FLOOR_MARGIN = 0.005  # minimum clearance a repositioned probe must reach
MAX_REPOSITION_TRIES = 10_000


@dataclass
class ProbeLine:
    """Deterministic start: probes on axis-parallel lines through the point at
    fraction gamma along the decision-space diagonal."""

    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError("gamma must lie in [0, 1]")


@dataclass
class RandomUniform:
    """Stochastic start: every coordinate drawn uniformly over its bounds."""

    seed: int


@dataclass
class CfoParams:
    n_probes: int
    n_steps: int
    ipd: ProbeLine | RandomUniform
    g_const: float = 2.0
    delta_t: float = 1.0
    alpha: float = 2.0
    beta: float = 2.0
    frep_init: float = 0.5
    floor_repositioning: bool = False

    def __post_init__(self):
        if self.n_probes < 1:
            raise ValueError("n_probes must be >= 1")
        if self.n_steps < 0:
            raise ValueError("n_steps must be >= 0")
        if not 0.05 <= self.frep_init <= 1.0:
            raise ValueError("frep_init must lie in [0.05, 1]")


@dataclass
class SwarmHistory:
    """Run history: positions and accelerations are (probe, dim, step) arrays,
    fitness is (probe, step), steps 0..n_steps inclusive."""

    positions: np.ndarray
    accels: np.ndarray
    fitness: np.ndarray

    @classmethod
    def allocate(cls, n_probes: int, n_dims: int, n_steps: int) -> "SwarmHistory":
        return cls(
            positions=np.zeros((n_probes, n_dims, n_steps + 1)),
            accels=np.zeros((n_probes, n_dims, n_steps + 1)),
            fitness=np.zeros((n_probes, n_steps + 1)),
        )

    @property
    def n_probes(self) -> int:
        return self.positions.shape[0]

    @property
    def n_steps(self) -> int:
        return self.positions.shape[2] - 1


@dataclass
class OptResult:
    best_coords: np.ndarray
    best_value: float
    worst_value: float
    best_probe: int
    best_step: int
    worst_probe: int
    worst_step: int
    evals_used: int


def probe_line_ipd(n_probes: int, space: DecisionSpace, gamma: float) -> np.ndarray:
    """Probe-line starting positions.

    Every probe starts at the diagonal point lower + gamma * (upper - lower).
    With per_axis = n_probes // n_dims slots per axis, probe ``s + per_axis * a``
    then gets coordinate ``a`` spread evenly from lower[a] to upper[a]. When
    fewer than two slots fit per axis the spread is skipped entirely and all
    probes stay on the diagonal point.
    """
    diag_point = space.lower + gamma * (space.upper - space.lower)
    positions = np.tile(diag_point, (n_probes, 1))
    per_axis = n_probes // space.n_dims
    if per_axis >= 2:
        for axis in range(space.n_dims):
            step = (space.upper[axis] - space.lower[axis]) / (per_axis - 1)
            for slot in range(per_axis):
                positions[slot + per_axis * axis, axis] = space.lower[axis] + slot * step
    return positions


def random_ipd(n_probes: int, space: DecisionSpace, rng: np.random.Generator) -> np.ndarray:
    """Uniform-random starting positions, one draw per coordinate, probe-major."""
    return rng.uniform(space.lower, space.upper, size=(n_probes, space.n_dims))


def step_positions(history: SwarmHistory, j: int, params: CfoParams) -> None:
    """Ballistic move: R_j = R_{j-1} + 0.5 * A_{j-1} * dt^2."""
    history.positions[:, :, j] = (
        history.positions[:, :, j - 1]
        + 0.5 * history.accels[:, :, j - 1] * params.delta_t**2
    )


def retrieve_errant(history: SwarmHistory, j: int, frep: float, space: DecisionSpace) -> None:
    """Pull out-of-bounds coordinates back inside the domain.

    A coordinate below its lower bound moves to lower + frep * (prev - lower),
    one above its upper bound to upper - frep * (upper - prev), where prev is
    the previous step's (in-bounds) position. With frep in (0, 1] the result
    is always inside the bounds.
    """
    pos = history.positions[:, :, j]
    prev = history.positions[:, :, j - 1]
    below = pos < space.lower
    if below.any():
        pos[below] = (space.lower + frep * (prev - space.lower))[below]
    above = pos > space.upper
    if above.any():
        pos[above] = (space.upper - frep * (space.upper - prev))[above]


def compute_accelerations(history: SwarmHistory, j: int, params: CfoParams) -> None:
    """Gravity-style accelerations from the step-j fitness field.

    Probe p feels, from each other probe k, a pull along (R_k - R_p) weighted
    by g_const * max(M_k - M_p, 0)^alpha / distance^beta; only better-fitness
    probes attract. Pairs at zero distance contribute nothing, which keeps
    coincident probes finite and motionless.
    """
    pos = history.positions[:, :, j]
    fit = history.fitness[:, j]
    n_probes = pos.shape[0]
    d2 = np.zeros((n_probes, n_probes))
    buf = np.empty((n_probes, n_probes))
    for axis in range(pos.shape[1]):
        c = pos[:, axis]
        np.subtract(c[None, :], c[:, None], out=buf)
        np.multiply(buf, buf, out=buf)
        d2 += buf
    zero_pairs = d2 == 0.0
    np.subtract(fit[None, :], fit[:, None], out=buf)  # buf[p, k] = M_k - M_p
    np.maximum(buf, 0.0, out=buf)
    if params.alpha == 2.0:
        np.multiply(buf, buf, out=buf)
    else:
        np.power(buf, params.alpha, out=buf)
    if params.beta != 2.0:  # beta == 2 divides by the squared distance directly
        np.sqrt(d2, out=d2)
        np.power(d2, params.beta, out=d2)
    d2[zero_pairs] = 1.0
    np.divide(buf, d2, out=buf)
    buf *= params.g_const
    buf[zero_pairs] = 0.0
    history.accels[:, :, j] = buf @ pos - buf.sum(axis=1, keepdims=True) * pos


def cycle_frep(frep: float) -> float:
    """Advance the retrieval factor by 0.05, wrapping past 1.0 back to 0.05.

    Values are snapped to the 0.05 grid so the 20-value cycle is exact in
    floating point.
    """
    nxt = round((frep + 0.05) * 20.0) / 20.0
    if nxt > 1.0:
        return 0.05
    return nxt


def scan_best(history: SwarmHistory, up_to_step: int) -> tuple[float, int, int]:
    """Best fitness over steps 0..up_to_step, all probes; later ties win.

    The scan order is step-major (all probes of step 0, then step 1, ...),
    matching the >= update rule, so an equal value seen later in that order
    takes the indices.
    """
    window = history.fitness[:, : up_to_step + 1]
    flat = window.T.ravel()
    idx = flat.size - 1 - int(np.argmax(flat[::-1]))
    step, probe = divmod(idx, window.shape[0])
    return float(flat[idx]), probe, step


def scan_worst(history: SwarmHistory, up_to_step: int) -> tuple[float, int, int]:
    """Worst fitness over steps 0..up_to_step; later ties win (<= update rule)."""
    window = history.fitness[:, : up_to_step + 1]
    flat = window.T.ravel()
    idx = flat.size - 1 - int(np.argmin(flat[::-1]))
    step, probe = divmod(idx, window.shape[0])
    return float(flat[idx]), probe, step


def reposition_floor_probes(
    history: SwarmHistory,
    probe: int,
    step: int,
    threshold: ThresholdState | None,
    objective,
    rng: np.random.Generator,
    margin: float = FLOOR_MARGIN,
    max_tries: int = MAX_REPOSITION_TRIES,
) -> int:
    """Redraw a probe sitting on the floor until it clears the margin.

    No-op when no threshold is active. Each redraw re-evaluates the probe
    (incrementing the objective's counter) and overwrites its position and
    fitness at the given step; after max_tries the last position stands.
    Returns the number of redraws used.
    """
    if threshold is None or not threshold.enabled:
        return 0
    space = objective.space
    tries = 0
    while (
        history.fitness[probe, step] - threshold.t_current < margin
        and tries < max_tries
    ):
        history.positions[probe, :, step] = rng.uniform(space.lower, space.upper)
        raw = objective.evaluate(history.positions[probe, :, step])
        history.fitness[probe, step] = apply_threshold(raw, threshold)
        tries += 1
    return tries


def _evaluate_step(history, j, objective, threshold, params, rng):
    raw = objective.evaluate_batch(history.positions[:, :, j])
    if threshold is not None:
        raw = apply_threshold(raw, threshold)
    history.fitness[:, j] = raw
    if params.floor_repositioning:
        for p in range(history.n_probes):
            reposition_floor_probes(history, p, j, threshold, objective, rng)


def run_cfo(
    params: CfoParams,
    objective,
    threshold: ThresholdState | None = None,
    rng: np.random.Generator | None = None,
) -> tuple[OptResult, SwarmHistory]:
    """Run one CFO search over the objective's decision space.

    ``objective`` needs ``space``, ``evaluate``, ``evaluate_batch`` and
    ``eval_count`` (see ObjectiveSpec). When a threshold state is supplied and
    enabled, the optimizer only ever sees the floored fitness. A probe-line
    run is bit-reproducible; a random start derives its generator from the
    seed in the params unless an explicit ``rng`` is passed (callers running
    several searches off one stream pass the shared generator).
    """
    space = objective.space
    if rng is None:
        if isinstance(params.ipd, RandomUniform):
            rng = np.random.default_rng(params.ipd.seed)
        elif params.floor_repositioning:
            rng = np.random.default_rng(0)
    history = SwarmHistory.allocate(params.n_probes, space.n_dims, params.n_steps)
    evals_before = objective.eval_count

    if isinstance(params.ipd, ProbeLine):
        history.positions[:, :, 0] = probe_line_ipd(params.n_probes, space, params.ipd.gamma)
    else:
        history.positions[:, :, 0] = random_ipd(params.n_probes, space, rng)
    _evaluate_step(history, 0, objective, threshold, params, rng)
    # accelerations at step 0 stay zero

    frep = params.frep_init
    for j in range(1, params.n_steps + 1):
        step_positions(history, j, params)
        retrieve_errant(history, j, frep, space)
        _evaluate_step(history, j, objective, threshold, params, rng)
        compute_accelerations(history, j, params)
        frep = cycle_frep(frep)

    best_value, best_probe, best_step = scan_best(history, params.n_steps)
    worst_value, worst_probe, worst_step = scan_worst(history, params.n_steps)
    result = OptResult(
        best_coords=history.positions[best_probe, :, best_step].copy(),
        best_value=best_value,
        worst_value=worst_value,
        best_probe=best_probe,
        best_step=best_step,
        worst_probe=worst_probe,
        worst_step=worst_step,
        evals_used=objective.eval_count - evals_before,
    )
    return result, history
