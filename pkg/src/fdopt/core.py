"""Core FDO/IFDO iteration engine.

Scout bees move by adding a pace vector to their position.  The pace is
steered by a fitness weight (ratio of the global best fitness to the
scout's own fitness) and, in IFDO mode, by alignment/cohesion terms
computed over the scout's neighborhood.  All randomness flows through a
single seeded ``numpy.random.Generator`` so a run is fully reproducible.
"""

import time
from dataclasses import dataclass, field

import numpy as np

FDO = "fdo"
IFDO = "ifdo"
_MODES = (FDO, IFDO)

# stability index of the heavy-tailed step sampler
LEVY_BETA = 1.5
# scale applied to raw heavy-tailed draws before clamping into [-1, 1]
LEVY_SCALE = 0.01
# tolerance for the fw == 0 / fw == 1 branch tests
FW_TOL = 1e-12
# cohesion components smaller than this contribute nothing to the proposal
COHESION_TOL = 1e-12

_MANTEGNA_SIGMA = None


@dataclass
class Bounds:
    """Box bounds of a search space.

    ``landscape_boundary`` is the dominant box extent, max(upper - lower);
    it feeds the neighbor-landscape radius in IFDO mode.
    """

    lower: np.ndarray
    upper: np.ndarray
    landscape_boundary: float = field(init=False)

    def __post_init__(self):
        self.lower = np.asarray(self.lower, dtype=float)
        self.upper = np.asarray(self.upper, dtype=float)
        if self.lower.shape != self.upper.shape:
            raise ValueError("lower and upper must have the same shape")
        if np.any(self.lower >= self.upper):
            raise ValueError("every lower bound must be strictly below its upper bound")
        self.landscape_boundary = float(np.max(self.upper - self.lower))

    @property
    def dimension(self):
        return self.lower.size


@dataclass
class ScoutBee:
    """One search agent: position, last accepted movement, cached fitness."""

    position: np.ndarray
    pace: np.ndarray
    fitness: float


@dataclass
class NeighborhoodContext:
    """Alignment/cohesion of a scout's neighborhood within radius ``nl``."""

    nl: float
    neighbor_count: int
    alignment: np.ndarray
    cohesion: np.ndarray


@dataclass
class RunConfig:
    population: int = 30
    iterations: int = 500
    mode: str = IFDO
    fdo_wf: float = 0.0
    seed: int = 0
    record_positions: bool = False
    wf_scope: str = "scout"  # "scout" or "swarm"

    def __post_init__(self):
        if self.population < 1:
            raise ValueError("population must be >= 1")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}")
        if self.wf_scope not in ("scout", "swarm"):
            raise ValueError("wf_scope must be 'scout' or 'swarm'")
        if not 0.0 <= self.fdo_wf <= 1.0:
            raise ValueError("fdo_wf must lie in [0, 1]")


@dataclass
class SwarmState:
    """Full optimizer state for one run.

    Positions, paces and fitness are stored as arrays indexed by scout;
    the ``scouts`` property exposes the per-agent view.
    """

    positions: np.ndarray  # (p, d)
    paces: np.ndarray  # (p, d)
    fitness: np.ndarray  # (p,)
    global_best_position: np.ndarray
    global_best_fitness: float
    weight_factors: np.ndarray  # (p,), all equal in swarm scope
    mode: str
    rng: np.random.Generator
    iteration: int = 0
    wf_scope: str = "scout"

    @property
    def population(self):
        return self.positions.shape[0]

    @property
    def scouts(self):
        return [
            ScoutBee(self.positions[i].copy(), self.paces[i].copy(), float(self.fitness[i]))
            for i in range(self.population)
        ]


@dataclass
class RunRecord:
    """Trace of a single run."""

    trace: np.ndarray  # per-iteration global best, shape (iterations,)
    best_position: np.ndarray
    best_fitness: float
    wall_time_s: float
    positions: np.ndarray | None = None  # (iterations, p, d) when recorded


def _mantegna_sigma(beta=LEVY_BETA):
    global _MANTEGNA_SIGMA
    if _MANTEGNA_SIGMA is None:
        from math import gamma, pi, sin

        num = gamma(1.0 + beta) * sin(pi * beta / 2.0)
        den = gamma((1.0 + beta) / 2.0) * beta * 2.0 ** ((beta - 1.0) / 2.0)
        _MANTEGNA_SIGMA = (num / den) ** (1.0 / beta)
    return _MANTEGNA_SIGMA


def levy_raw(rng, size=None):
    """Raw Mantegna heavy-tailed draw(s) with stability index ``LEVY_BETA``."""
    sigma = _mantegna_sigma()
    u = rng.normal(0.0, sigma, size=size)
    v = rng.normal(0.0, 1.0, size=size)
    return u / np.abs(v) ** (1.0 / LEVY_BETA)


def levy_random(rng, size=None):
    """Heavy-tailed random value(s) scaled and clamped into [-1, 1]."""
    value = LEVY_SCALE * levy_raw(rng, size=size)
    return np.clip(value, -1.0, 1.0) if size is not None else float(min(1.0, max(-1.0, value)))


def compute_fitness_weight(best_fitness, current_fitness, wf, mode):
    """Fitness weight steering the pace magnitude.

    FDO subtracts the weight factor unconditionally; IFDO only subtracts
    it when the raw ratio exceeds it.  A zero current fitness short-circuits
    to 0 to avoid dividing by zero.
    """
    if current_fitness == 0.0:
        return 0.0
    ratio = abs(best_fitness / current_fitness)
    if mode == FDO:
        return ratio - wf
    if ratio > wf:
        return ratio - wf
    return ratio


def compute_pace(position, global_best_position, fw, r, rng):
    """Movement vector for one scout.

    With fw at 0 or 1 the scout random-walks: each coordinate is scaled by
    a fresh heavy-tailed draw.  Otherwise the scout moves along the line to
    the global best, scaled by fw, with the sign set by ``r``.
    """
    position = np.asarray(position, dtype=float)
    if abs(fw) < FW_TOL or abs(fw - 1.0) < FW_TOL:
        return position * levy_random(rng, size=position.size)
    direction = position - np.asarray(global_best_position, dtype=float)
    if r < 0.0:
        return direction * fw * -1.0
    return direction * fw


def neighbor_landscape(bounds):
    """Neighbor radius: landscape boundary over the circle constant."""
    return bounds.landscape_boundary / (2.0 * np.pi)


def neighborhood(scout_index, swarm, nl):
    """Alignment and cohesion of the scouts within radius ``nl``.

    Distance is Euclidean between positions.  With no neighbors both
    vectors are zero, which makes the IFDO proposal collapse to the FDO one.
    """
    own = swarm.positions[scout_index]
    deltas = swarm.positions - own
    dist = np.sqrt(np.einsum("ij,ij->i", deltas, deltas))
    mask = dist <= nl
    mask[scout_index] = False
    count = int(np.count_nonzero(mask))
    if count == 0:
        zero = np.zeros_like(own)
        return NeighborhoodContext(nl, 0, zero, zero.copy())
    alignment = swarm.paces[mask].mean(axis=0)
    cohesion = swarm.positions[mask].mean(axis=0) - own
    return NeighborhoodContext(nl, count, alignment, cohesion)


def propose_position(position, pace, ctx, mode):
    """Candidate position: add pace, plus alignment/cohesion in IFDO mode."""
    position = np.asarray(position, dtype=float)
    candidate = position + pace
    if mode == IFDO and ctx is not None and ctx.neighbor_count > 0:
        safe = np.abs(ctx.cohesion) >= COHESION_TOL
        extra = np.zeros_like(candidate)
        np.divide(ctx.alignment, ctx.cohesion, out=extra, where=safe)
        candidate = candidate + extra
    return candidate


def enforce_bounds(position, bounds, rng):
    """Repair out-of-box coordinates.

    A violated coordinate is replaced by the crossed boundary scaled by a
    fresh uniform draw; a final clamp guarantees feasibility for boxes where
    the scaled boundary itself leaves the box.
    """
    out = np.array(position, dtype=float)
    lb, ub = bounds.lower, bounds.upper
    if np.any(out > ub) or np.any(out < lb):
        for j in range(out.size):
            if out[j] > ub[j]:
                out[j] = ub[j] * rng.uniform()
            elif out[j] < lb[j]:
                out[j] = lb[j] * rng.uniform()
        np.clip(out, lb, ub, out=out)
    return out


def update_weight_factor(wf, accepted, mode, rng):
    """Shrink a scout's weight factor after an accepted IFDO move."""
    if mode == IFDO and accepted:
        return float(rng.uniform(0.0, wf))
    return wf


def init_population(config, objective):
    """Uniformly seeded swarm with zero paces and evaluated fitness."""
    bounds = objective.bounds
    d = bounds.dimension
    rng = np.random.default_rng(config.seed)
    positions = rng.uniform(bounds.lower, bounds.upper, size=(config.population, d))
    paces = np.zeros_like(positions)
    fitness = np.array(
        [_safe_fitness(objective, positions[i], rng) for i in range(config.population)]
    )
    if config.mode == IFDO:
        if config.wf_scope == "swarm":
            weight_factors = np.full(config.population, rng.uniform(0.0, 1.0))
        else:
            weight_factors = rng.uniform(0.0, 1.0, size=config.population)
    else:
        weight_factors = np.full(config.population, float(config.fdo_wf))
    best = int(np.argmin(fitness))
    return SwarmState(
        positions=positions,
        paces=paces,
        fitness=fitness,
        global_best_position=positions[best].copy(),
        global_best_fitness=float(fitness[best]),
        weight_factors=weight_factors,
        mode=config.mode,
        rng=rng,
        wf_scope=config.wf_scope,
    )


def _safe_fitness(objective, x, rng):
    value = objective.evaluate(x, rng)
    return float(value) if np.isfinite(value) else np.inf


def step(swarm, objective):
    """Advance the swarm by one iteration (in place) and return it.

    Each scout proposes a move; if it does not improve, the scout retries
    with its previously saved pace, and otherwise stays put.  The global
    best is refreshed after every evaluation.
    """
    bounds = objective.bounds
    rng = swarm.rng
    ifdo = swarm.mode == IFDO
    nl = neighbor_landscape(bounds) if ifdo else 0.0
    for i in range(swarm.population):
        current_fitness = float(swarm.fitness[i])
        r = levy_random(rng)
        wf = float(swarm.weight_factors[i])
        fw = compute_fitness_weight(swarm.global_best_fitness, current_fitness, wf, swarm.mode)
        ctx = neighborhood(i, swarm, nl) if ifdo else None
        pace = compute_pace(swarm.positions[i], swarm.global_best_position, fw, r, rng)
        candidate = enforce_bounds(
            propose_position(swarm.positions[i], pace, ctx, swarm.mode), bounds, rng
        )
        new_fitness = _safe_fitness(objective, candidate, rng)
        accepted_pace = pace
        if new_fitness >= current_fitness:
            # second chance with the previously saved pace
            candidate = enforce_bounds(
                propose_position(swarm.positions[i], swarm.paces[i], ctx, swarm.mode),
                bounds,
                rng,
            )
            new_fitness = _safe_fitness(objective, candidate, rng)
            accepted_pace = swarm.paces[i].copy()
        if new_fitness < current_fitness:
            swarm.positions[i] = candidate
            swarm.paces[i] = accepted_pace
            swarm.fitness[i] = new_fitness
            new_wf = update_weight_factor(wf, True, swarm.mode, rng)
            if swarm.wf_scope == "swarm":
                swarm.weight_factors[:] = new_wf
            else:
                swarm.weight_factors[i] = new_wf
            if new_fitness < swarm.global_best_fitness:
                swarm.global_best_fitness = new_fitness
                swarm.global_best_position = candidate.copy()
    swarm.iteration += 1
    return swarm


def run(config, objective):
    """Initialize a swarm and advance it for ``config.iterations`` steps."""
    start = time.perf_counter()
    swarm = init_population(config, objective)
    trace = np.empty(config.iterations)
    history = (
        np.empty((config.iterations, config.population, objective.bounds.dimension))
        if config.record_positions
        else None
    )
    for t in range(config.iterations):
        step(swarm, objective)
        trace[t] = swarm.global_best_fitness
        if history is not None:
            history[t] = swarm.positions
    return RunRecord(
        trace=trace,
        best_position=swarm.global_best_position.copy(),
        best_fitness=float(swarm.global_best_fitness),
        wall_time_s=time.perf_counter() - start,
        positions=history,
    )


def first_best_iteration(trace):
    """1-based iteration at which the final best value was first reached."""
    trace = np.asarray(trace)
    return int(np.argmax(trace <= trace[-1])) + 1
