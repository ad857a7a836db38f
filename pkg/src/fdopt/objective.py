"""Objective specification shared by every benchmark and application."""

from dataclasses import dataclass, field

import numpy as np

from .core import Bounds


@dataclass
class ObjectiveSpec:
    """A benchmark or application objective.

    ``evaluate`` applies the shift as f(x - shift), so a function whose base
    form has its optimum at the origin attains it at x = shift.  ``optimum``
    records the actual minimizer in original coordinates when it is known
    (for base forms whose minimum is not at the origin it differs from the
    shift).  ``rng`` is only consumed by noisy evaluators.
    """

    id: str
    dimension: int
    bounds: Bounds
    evaluator: object  # callable (z, rng) -> float on shifted coordinates
    shift: np.ndarray = None
    known_fmin: float | None = None
    tabulated_fmin: float | None = None
    optimum: np.ndarray | None = None
    noisy: bool = False
    notes: str = ""

    def __post_init__(self):
        if self.shift is None:
            self.shift = np.zeros(self.dimension)
        self.shift = np.asarray(self.shift, dtype=float)
        if self.shift.size != self.dimension:
            raise ValueError(f"{self.id}: shift length != dimension")

    def evaluate(self, x, rng=None):
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dimension,):
            raise ValueError(
                f"{self.id}: expected vector of length {self.dimension}, got shape {x.shape}"
            )
        return float(self.evaluator(x - self.shift, rng))


def deterministic(kernel):
    """Wrap an rng-free kernel into the (z, rng) evaluator signature."""

    def evaluator(z, rng):
        return kernel(z)

    return evaluator


def box(dimension, low, high) -> Bounds:
    return Bounds(np.full(dimension, float(low)), np.full(dimension, float(high)))
