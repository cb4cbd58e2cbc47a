"""Transport of linear systems y' = A(z)·y along piecewise linear paths."""

import logging
from typing import Callable

import numpy as np

from misc.errors import SingularProximity, StepUnderflow
from models.numbers import PathSpec

logger = logging.getLogger(__name__)

# Dormand-Prince 5(4) tableau
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_E = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525, -1 / 40])

LOCAL_TOL = 1e-11
SAFETY = 0.9
MIN_STEP = 1e-13
CLEARANCE_SAMPLES = 513

MatrixField = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _check_clearance(start: np.ndarray, end: np.ndarray, clearance: float,
                     distance: Callable[[np.ndarray], float] | None) -> None:
    if distance is None:
        return
    for s in np.linspace(0.0, 1.0, CLEARANCE_SAMPLES):
        point = start + s * (end - start)
        d = distance(point)
        if d < clearance:
            raise SingularProximity(f"Path point {tuple(point)} is {d:.3e} from the singular locus "
                                    f"(clearance {clearance:.1e})")


def _transport_segment(rhs: MatrixField, start: np.ndarray, end: np.ndarray, y: np.ndarray) -> np.ndarray:
    direction = end - start
    scale = float(np.linalg.norm(direction))
    tol = LOCAL_TOL * scale
    field = lambda s, v: rhs(start + s * direction, direction) @ v

    s, h = 0.0, 0.05
    err_prev = 1.0
    steps = rejected = 0
    while s < 1.0:
        h = min(h, 1.0 - s)
        k = [field(s, y)]
        for i in range(1, 7):
            k.append(field(s + _C[i] * h, y + h * sum(a * kj for a, kj in zip(_A[i], k))))
        y_new = y + h * sum(b * ki for b, ki in zip(_B5, k))
        err_vec = h * sum(e * ki for e, ki in zip(_E, k))
        err = float(np.max(np.abs(err_vec) / (tol + tol * np.maximum(np.abs(y), np.abs(y_new)))))
        if err <= 1.0:
            s += h
            y = y_new
            steps += 1
            # PI controller
            factor = SAFETY * max(err, 1e-10) ** (-0.7 / 5) * max(err_prev, 1e-10) ** (0.4 / 5)
            err_prev = err
            h *= min(5.0, max(0.2, factor))
        else:
            rejected += 1
            h *= max(0.2, SAFETY * err ** (-1 / 5))
        if h < MIN_STEP:
            raise StepUnderflow(f"Step size fell to {h:.2e} at s={s:.6f} on the segment "
                                f"{tuple(start)} -> {tuple(end)}")
    logger.debug(f"segment transported in {steps} steps ({rejected} rejected)")
    return y


def ode_integrate(rhs: MatrixField, path: PathSpec, y0,
                  distance: Callable[[np.ndarray], float] | None = None) -> np.ndarray:
    """
    Transport y0 along path for the linear system dy = A·y.

    Parameters
    ----------
    rhs : callable (point, direction) -> square matrix; the derivative of y along a
        segment parametrized by s in [0, 1] is rhs(point, direction) @ y
    path : waypoints and clearance
    y0 : initial vector
    distance : optional callable returning the distance of a point to the singular locus

    Returns
    -------
    numpy complex vector at the last waypoint
    """
    y = np.asarray(y0, dtype=complex).copy()
    points = [np.asarray(w, dtype=complex) for w in path.waypoints]
    for start, end in zip(points, points[1:]):
        _check_clearance(start, end, path.clearance, distance)
        y = _transport_segment(rhs, start, end, y)
    return y


def connection_field(coefficients: Callable[[np.ndarray], list[np.ndarray]]) -> MatrixField:
    """Turn per-coordinate connection matrices M_i(z) into the field Σ M_i(z)·dz_i/ds."""
    def field(point: np.ndarray, direction: np.ndarray) -> np.ndarray:
        mats = coefficients(point)
        return sum(d * m for d, m in zip(direction, mats))
    return field
