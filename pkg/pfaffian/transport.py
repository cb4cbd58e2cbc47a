"""Series-built solution vectors and their transport along paths by the connection."""

import logging

import numpy as np

from misc.errors import DomainError
from models.numbers import PathSpec
from numerics.ode import connection_field, ode_integrate
from pfaffian.connections import f2_singular_distance, omega_2f1_at, omega_f2_at, omega_tensor_at

logger = logging.getLogger(__name__)

VECTOR_RADIUS = 0.6
MAX_ORDER = 400


def f2_solution_vector(beta1: float, beta2: float, z1: complex, z2: complex) -> np.ndarray:
    """
    (F, θ1 F, θ2 F, θ1 θ2 F) for the quadric F2 by its double series, |z1| + |z2| <= 0.6.
    """
    z1, z2 = complex(z1), complex(z2)
    if abs(z1) + abs(z2) > VECTOR_RADIUS:
        raise DomainError(f"Series solution vector needs |z1|+|z2| <= {VECTOR_RADIUS}")
    alpha = beta1 + beta2 - 0.5
    g1, g2 = 2 * beta1, 2 * beta2
    order = max(20, min(MAX_ORDER, int(np.ceil(np.log(1e-18) / np.log(max(abs(z1) + abs(z2), 1e-3)))) + 10))
    m = np.arange(order)
    # coefficients of the double series with x = z1, y = z2 factored in along each axis
    col = np.ones(order, dtype=complex)
    for k in range(1, order):
        col[k] = col[k - 1] * (alpha + k - 1) * (beta1 + k - 1) / ((g1 + k - 1) * k) * z1
    table = np.zeros((order, order), dtype=complex)
    table[:, 0] = col
    for n in range(1, order):
        table[:, n] = table[:, n - 1] * (alpha + m + n - 1) * (beta2 + n - 1) / ((g2 + n - 1) * n) * z2
    mm, nn = np.meshgrid(m, m, indexing='ij')
    return np.array([table.sum(), (mm * table).sum(), (nn * table).sum(), (mm * nn * table).sum()])


def hyp2f1_solution_vector(beta1: float, beta2: float, lam: complex) -> np.ndarray:
    """(f, Λ f') with f = 2F1(α, β2; β1+1/2; Λ²), by the power series in Λ², |Λ| <= 0.8."""
    lam = complex(lam)
    if abs(lam) > 0.8:
        raise DomainError("Series solution vector needs |Λ| <= 0.8")
    a, b, c = beta1 + beta2 - 0.5, beta2, beta1 + 0.5
    x = lam * lam
    term, total, theta = 1 + 0j, 0j, 0j
    for n in range(MAX_ORDER):
        total += term
        theta += 2 * n * term
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        if abs(term) * (n + 2) < 1e-18:
            break
    return np.array([total, theta])


def transport_f2(beta1: float, beta2: float, path: PathSpec, y0) -> np.ndarray:
    """Transport a solution vector of the F2 system along a path in (z1, z2)."""
    field = connection_field(lambda point: omega_f2_at(beta1, beta2, point[0], point[1]).coeff)
    return ode_integrate(field, path, y0, distance=f2_singular_distance)


def transport_2f1(beta1: float, beta2: float, path: PathSpec, y0) -> np.ndarray:
    field = connection_field(lambda point: omega_2f1_at(beta1, beta2, point[0]).coeff)
    distance = lambda point: min(abs(point[0]), abs(point[0] - 1), abs(point[0] + 1))
    return ode_integrate(field, path, y0, distance=distance)


def transport_tensor(beta1: float, beta2: float, path: PathSpec, y0) -> np.ndarray:
    field = connection_field(lambda point: omega_tensor_at(beta1, beta2, point[0], point[1]).coeff)

    def distance(point) -> float:
        return min(min(abs(x), abs(x - 1), abs(x + 1)) for x in point)

    return ode_integrate(field, path, y0, distance=distance)
