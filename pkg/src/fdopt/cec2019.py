"""CEC-C06 2019 "100-Digit Challenge" functions, raw forms.

CEC01-CEC03 keep their native dimensions; CEC04-CEC10 are 10-dimensional
over [-100, 100].  All ten are implemented unshifted and unrotated.  The
competition's tabulated f_min of 1 (a bias added by the official scoring
code) is deliberately not hard-coded; ``known_fmin`` records the raw floor
where one is analytically established.
"""

import numpy as np

from .objective import ObjectiveSpec, box, deterministic
from .classical import rastrigin, griewank, weierstrass, ackley


def chebyshev(z):
    """Storn's Chebyshev polynomial fitting problem (d = 9)."""
    n = z.size
    # T_{n-1}(1.2) via the Chebyshev recurrence
    a, b = 1.0, 1.2
    for _ in range(n - 2):
        a, b = b, 2.4 * b - a
    upper = b
    sample = 32 * n
    y = np.linspace(-1.0, 1.0, sample + 1)
    px = np.full(y.size, z[0])
    for j in range(1, n):
        px = y * px + z[j]
    outside = np.abs(px) > 1.0
    total = float(np.sum((1.0 - np.abs(px[outside])) ** 2))
    for endpoint in (-1.2, 1.2):
        p = z[0]
        for j in range(1, n):
            p = endpoint * p + z[j]
        if p < upper:
            total += p * p
    return total


def inverse_hilbert(z):
    """Inverse Hilbert matrix problem (d = 16, i.e. a 4x4 candidate inverse)."""
    b = int(round(np.sqrt(z.size)))
    H = 1.0 / (np.add.outer(np.arange(b), np.arange(b)) + 1.0)
    X = z.reshape(b, b)
    return float(np.sum(np.abs(H @ X - np.eye(b))))


def lennard_jones(z):
    """Minimum-energy cluster of z.size/3 atoms (d = 18: six atoms)."""
    atoms = z.reshape(-1, 3)
    total = 0.0
    for i in range(atoms.shape[0] - 1):
        d2 = np.sum((atoms[i + 1 :] - atoms[i]) ** 2, axis=1)
        r6 = d2**3
        for u in r6:
            total += (1.0 / u - 2.0) / u if u > 1e-10 else 1e20
    return float(total)


def modified_schwefel(z):
    n = z.size
    y = z + 420.9687462275036
    g = np.empty(n)
    for i, v in enumerate(y):
        if abs(v) <= 500.0:
            g[i] = v * np.sin(np.sqrt(abs(v)))
        elif v > 500.0:
            w = 500.0 - v % 500.0
            g[i] = w * np.sin(np.sqrt(abs(w))) - (v - 500.0) ** 2 / (10000.0 * n)
        else:
            w = abs(v) % 500.0 - 500.0
            g[i] = w * np.sin(np.sqrt(abs(w))) - (v + 500.0) ** 2 / (10000.0 * n)
    return float(418.9829 * n - np.sum(g))


def expanded_schaffer_f6(z):
    x = z
    y = np.roll(z, -1)
    s = x * x + y * y
    return float(np.sum(0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2))


def happy_cat(z):
    n = z.size
    s2 = float(np.sum(z * z))
    s1 = float(np.sum(z))
    return float(abs(s2 - n) ** 0.25 + (0.5 * s2 + s1) / n + 0.5)


_FUNCTIONS = {
    "CEC01": (chebyshev, 9, -8192, 8192, None),
    "CEC02": (inverse_hilbert, 16, -16384, 16384, 0.0),
    "CEC03": (lennard_jones, 18, -4, 4, None),
    "CEC04": (rastrigin, 10, -100, 100, 0.0),
    "CEC05": (griewank, 10, -100, 100, 0.0),
    "CEC06": (weierstrass, 10, -100, 100, 0.0),
    "CEC07": (modified_schwefel, 10, -100, 100, None),
    "CEC08": (expanded_schaffer_f6, 10, -100, 100, 0.0),
    "CEC09": (happy_cat, 10, -100, 100, 0.0),
    "CEC10": (ackley, 10, -100, 100, 0.0),
}


def cec_catalog():
    """All 10 CEC-2019 objective specs."""
    specs = []
    for fid, (kernel, dim, low, high, fmin) in _FUNCTIONS.items():
        specs.append(
            ObjectiveSpec(
                id=fid,
                dimension=dim,
                bounds=box(dim, low, high),
                evaluator=deterministic(kernel),
                known_fmin=fmin,
                tabulated_fmin=1.0,
            )
        )
    return specs


def cec_evaluate(fid, x):
    """Evaluate one CEC function by identifier."""
    if fid not in _FUNCTIONS:
        raise KeyError(f"unknown CEC function {fid!r}")
    kernel, dim, _, _, _ = _FUNCTIONS[fid]
    x = np.asarray(x, dtype=float)
    if x.shape != (dim,):
        raise ValueError(f"{fid}: expected vector of length {dim}, got shape {x.shape}")
    return float(kernel(x))
