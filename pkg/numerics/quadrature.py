"""
Tanh-sinh quadrature with algebraic endpoint weights.

The segment [a, b] is parametrized by s in (0, 1) and s = 1/(1 + exp(-2v)) with
v = (π/2)·sinh(t). The logs of s and 1-s are formed with logaddexp so the weight
s^ea·(1-s)^eb keeps full relative accuracy arbitrarily close to both ends.
"""

import logging
import math
from typing import Callable

import numpy as np

from misc.errors import NoConvergence
from models.numbers import QuadratureSpec

logger = logging.getLogger(__name__)

H0 = 0.5
V_CAP = 300.0


def _t_max(exp_a: float, exp_b: float) -> float:
    v_max = min(25.0 / (min(exp_a, exp_b) + 1.0) + 5.0, V_CAP)
    return math.asinh(2.0 * v_max / math.pi)


def _level_nodes(level: int, t_max: float) -> np.ndarray:
    if level == 0:
        n = int(math.ceil(t_max / H0))
        return H0 * np.arange(-n, n + 1, dtype=float)
    h = H0 / 2 ** level
    n = int(math.ceil(t_max / h))
    k = np.arange(-n, n + 1)
    return ((2 * k + 1) * h)[np.abs((2 * k + 1) * h) <= t_max]


def _sample(f, a: complex, b: complex, exp_a: float, exp_b: float, t: np.ndarray):
    v = 0.5 * math.pi * np.sinh(t)
    log_s = -np.logaddexp(0.0, -2.0 * v)
    log_c = -np.logaddexp(0.0, 2.0 * v)
    weight = math.pi * np.cosh(t) * np.exp((exp_a + 1.0) * log_s + (exp_b + 1.0) * log_c)
    keep = weight > 0
    s, c, weight = np.exp(log_s[keep]), np.exp(log_c[keep]), weight[keep]
    if not len(weight):
        return 0.0
    # measure x from the closer endpoint so a+(b-a)s keeps its digits near b
    x = np.where(s <= 0.5, a + (b - a) * s, b - (b - a) * c)
    values = np.asarray(f(x), dtype=complex)
    weight = weight.reshape((-1,) + (1,) * (values.ndim - 1))
    return np.sum(values * weight, axis=0)


def integrate_singular(f: Callable[[np.ndarray], np.ndarray], a: complex, b: complex,
                       exp_a: float = 0.0, exp_b: float = 0.0,
                       spec: QuadratureSpec | None = None):
    """
    Integrate (b - a)·∫_0^1 f(a + (b - a)s)·s^exp_a·(1 - s)^exp_b ds.

    The integrand f must be vectorized: it receives a complex array of nodes and
    returns an array whose first axis matches it. Trailing axes are integrated
    componentwise, which lets nested integrals evaluate a whole inner rule per call.

    Parameters
    ----------
    f : smooth part of the integrand
    a, b : complex endpoints of the straight segment
    exp_a, exp_b : endpoint exponents, both > -1
    spec : tolerances and deepest refinement level

    Returns
    -------
    complex, or an array of complex for array-valued f

    Raises
    ------
    NoConvergence
        When successive levels still differ by more than the tolerance at max_level.
    """
    if exp_a <= -1 or exp_b <= -1:
        raise ValueError(f"Endpoint exponents must exceed -1, got ({exp_a}, {exp_b})")
    spec = spec or QuadratureSpec()
    a, b = complex(a), complex(b)
    t_max = _t_max(exp_a, exp_b)

    total = _sample(f, a, b, exp_a, exp_b, _level_nodes(0, t_max))
    previous = H0 * total
    for level in range(1, spec.max_level + 1):
        total = total + _sample(f, a, b, exp_a, exp_b, _level_nodes(level, t_max))
        current = (H0 / 2 ** level) * total
        delta = float(np.max(np.abs(current - previous)))
        size = float(np.max(np.abs(current)))
        if level >= 3 and delta <= max(spec.abs_tol, spec.rel_tol * size):
            logger.debug(f"tanh-sinh converged at level {level} (delta {delta:.2e})")
            result = (b - a) * current
            return complex(result) if np.ndim(result) == 0 else result
        previous = current
    raise NoConvergence(f"tanh-sinh on [{a}, {b}] did not converge by level {spec.max_level}: "
                        f"last difference {delta:.3e}")
