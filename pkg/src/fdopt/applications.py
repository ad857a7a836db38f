"""Real-world objectives: antenna sidelobe suppression and evacuation exit placement.

The antenna problem optimizes four free element positions (in wavelengths)
of a symmetric 10-element aperiodic linear array whose outermost element is
fixed at 2.25; the fitness is the peak sidelobe level in dB outside the
main lobe.  The evacuation problem places a single exit on the perimeter
of a rectangular area to minimize the mean evacuation time of a fixed
pedestrian crowd; the decision variable is the perimeter arclength.
"""

from dataclasses import dataclass, field

import numpy as np

from .objective import ObjectiveSpec, box, deterministic

# -- antenna array -----------------------------------------------------------

FIXED_ELEMENT = 2.25
MIN_POSITION = 0.125
MAX_POSITION = 2.0
MIN_SPACING = 0.25
# angles with |cos(theta)| below this belong to the main lobe (first-null
# estimate for the 4.5-wavelength half-aperture) and are excluded from the
# sidelobe maximum
MAIN_LOBE_COS = 1.0 / 4.5
PENALTY_WEIGHT = 1e6
PENALTY_OFFSET = 1e3


@dataclass
class AntennaProblem:
    steering_angle_deg: float = 90.0
    theta_step_deg: float = 0.25

    def __post_init__(self):
        self.theta_grid = np.arange(0.0, 180.0 + 1e-9, self.theta_step_deg)
        cos_t = np.cos(np.radians(self.theta_grid))
        self.sidelobe_mask = np.abs(cos_t) >= MAIN_LOBE_COS
        self._cos_diff = cos_t - np.cos(np.radians(self.steering_angle_deg))


def array_factor(theta_deg, positions, steering_angle_deg=90.0):
    """Array factor of the symmetric array at one angle (degrees)."""
    u = np.cos(np.radians(theta_deg)) - np.cos(np.radians(steering_angle_deg))
    positions = np.asarray(positions, dtype=float)
    return float(
        np.sum(np.cos(u * 2.0 * np.pi * positions))
        + np.cos(u * 2.0 * np.pi * FIXED_ELEMENT)
    )


def spacing_violation(candidate):
    """Total constraint violation: zero iff the candidate is feasible."""
    x = np.asarray(candidate, dtype=float)
    total = 0.0
    total += float(np.sum(np.maximum(0.0, MIN_POSITION - x)))
    total += float(np.sum(np.maximum(0.0, x - MAX_POSITION)))
    elements = np.append(x, FIXED_ELEMENT)
    for i in range(elements.size - 1):
        gaps = np.abs(elements[i + 1 :] - elements[i])
        total += float(np.sum(np.maximum(0.0, MIN_SPACING - gaps)))
    return total


def is_feasible(candidate):
    return spacing_violation(candidate) == 0.0


def antenna_fitness(candidate, problem):
    """Peak sidelobe level in dB, or a static penalty for infeasible layouts."""
    violation = spacing_violation(candidate)
    if violation > 0.0:
        return PENALTY_WEIGHT * violation + PENALTY_OFFSET
    x = np.asarray(candidate, dtype=float)
    u = problem._cos_diff[problem.sidelobe_mask]
    af = np.sum(np.cos(np.outer(u, 2.0 * np.pi * x)), axis=1) + np.cos(
        u * 2.0 * np.pi * FIXED_ELEMENT
    )
    magnitude = np.maximum(np.abs(af), 1e-300)
    return float(np.max(20.0 * np.log10(magnitude)))


def antenna_objective(problem=None):
    problem = problem or AntennaProblem()
    return ObjectiveSpec(
        id="ANTENNA",
        dimension=4,
        bounds=box(4, MIN_POSITION, MAX_POSITION),
        evaluator=deterministic(lambda z: antenna_fitness(z, problem)),
    )


# -- evacuation --------------------------------------------------------------


@dataclass
class EvacScenario:
    width: float
    height: float
    positions: np.ndarray  # (n, 2)
    desired_speeds: np.ndarray  # (n,)
    time_formula: str = "paper"  # "paper" or "physical"

    def __post_init__(self):
        self.positions = np.asarray(self.positions, dtype=float)
        self.desired_speeds = np.asarray(self.desired_speeds, dtype=float)
        if np.any(self.desired_speeds <= 0):
            raise ValueError("desired speeds must be positive")
        if np.any(self.positions[:, 0] < 0) or np.any(self.positions[:, 0] > self.width):
            raise ValueError("pedestrian x outside the area")
        if np.any(self.positions[:, 1] < 0) or np.any(self.positions[:, 1] > self.height):
            raise ValueError("pedestrian y outside the area")

    @property
    def perimeter(self):
        return 2.0 * (self.width + self.height)


def build_scenario(width, height, count, seed, time_formula="paper"):
    """Random scenario: uniform positions, uniform[0.6, 1.4] m/s desired speeds."""
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    positions = rng.uniform([0.0, 0.0], [width, height], size=(count, 2))
    speeds = rng.uniform(0.6, 1.4, size=count)
    return EvacScenario(width, height, positions, speeds, time_formula)


def perimeter_point(s, width, height):
    """Map arclength s in [0, perimeter) to a boundary point, counterclockwise
    from the origin corner."""
    perimeter = 2.0 * (width + height)
    s = float(s) % perimeter
    if s < width:
        return np.array([s, 0.0])
    s -= width
    if s < height:
        return np.array([width, s])
    s -= height
    if s < width:
        return np.array([width - s, height])
    s -= width
    return np.array([0.0, height - s])


def evac_distance(p1, p2):
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    return float(np.hypot(p2[0] - p1[0], p2[1] - p1[1]))


def evac_time(dist, desired_speed, formula="paper"):
    """Evacuation time of one pedestrian.

    "paper" multiplies half the distance by the desired speed; "physical"
    is the dimensionally conventional distance over speed.
    """
    if desired_speed <= 0:
        raise ValueError("desired_speed must be positive")
    if formula == "paper":
        return dist / 2.0 * desired_speed
    if formula == "physical":
        return dist / desired_speed
    raise ValueError("formula must be 'paper' or 'physical'")


def evac_fitness(exit_parameter, scenario):
    """Mean evacuation time for an exit at the given perimeter arclength."""
    door = perimeter_point(exit_parameter, scenario.width, scenario.height)
    deltas = scenario.positions - door
    dist = np.hypot(deltas[:, 0], deltas[:, 1])
    if scenario.time_formula == "paper":
        times = dist / 2.0 * scenario.desired_speeds
    else:
        times = dist / scenario.desired_speeds
    return float(np.mean(times))


def evac_objective(scenario):
    return ObjectiveSpec(
        id="EVAC",
        dimension=1,
        bounds=box(1, 0.0, scenario.perimeter),
        evaluator=deterministic(lambda z: evac_fitness(z[0], scenario)),
    )


def save_scenario(scenario, path):
    """Flat text format: header ``area W H``, then one ``x y speed`` per line."""
    with open(path, "w") as fh:
        fh.write(f"area {scenario.width:.17g} {scenario.height:.17g}\n")
        for (x, y), v in zip(scenario.positions, scenario.desired_speeds):
            fh.write(f"{x:.17g} {y:.17g} {v:.17g}\n")


def load_scenario(path, time_formula="paper"):
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3 or header[0] != "area":
            raise ValueError(f"{path}: expected header 'area W H'")
        width, height = float(header[1]), float(header[2])
        rows = [list(map(float, line.split())) for line in fh if line.strip()]
    data = np.asarray(rows, dtype=float)
    return EvacScenario(width, height, data[:, :2], data[:, 2], time_formula)
