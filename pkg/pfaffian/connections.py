"""
Connection matrices of the F2 system, the 2F1 system and their outer tensor product.

The entry formulas are written once over any ring that supports + - * / with
rational constants: they evaluate numerically on Python complex numbers and
exactly on ProductForm or RatFunc elements.
"""

import logging
from fractions import Fraction

import numpy as np

from misc.errors import SingularLocus
from models.connections import ConnectionForm

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
LOCUS_TOL = 1e-8


def f2_coefficients(b1, b2, z1, z2) -> tuple[list[list], list[list]]:
    """
    Coefficients of dz1 and dz2 in the connection of the quadric F2 system.

    The solution vector is (F, θ1 F, θ2 F, θ1 θ2 F) with θi = zi ∂/∂zi and
    α = β1 + β2 - 1/2, γi = 2βi.
    """
    a = b1 + b2 - HALF
    e1, e2 = z1 - 1, z2 - 1
    tri = z1 + z2 - 1
    w44_1 = -(((a + b1 - 2 * b2 + 1) * z1 * z1
               + ((2 * b1 - b2 - 1) * z2 - a - 3 * b1 + 2 * b2) * z1
               + (1 - 2 * b1) * z2 + 2 * b1 - 1) / (z1 * e1 * tri))
    w44_2 = -(((a + b2 - 2 * b1 + 1) * z2 * z2
               + ((2 * b2 - b1 - 1) * z1 - a - 3 * b2 + 2 * b1) * z2
               + (1 - 2 * b2) * z1 + 2 * b2 - 1) / (z2 * e2 * tri))
    m1 = [
        [0, 1 / z1, 0, 0],
        [-a * b1 / e1, -((a + b1) * z1 - 2 * b1 + 1) / (z1 * e1), -b1 / e1, -1 / e1],
        [0, 0, 0, 1 / z1],
        [a * b1 * b2 * z2 / (e1 * tri),
         b2 * (a - b1 + 1) * z2 / (e1 * tri),
         -b1 * ((a - 2 * b2 + 1) * z1 - b2 * z2 - a + 2 * b2 - 1) / (e1 * tri),
         w44_1],
    ]
    m2 = [
        [0, 0, 1 / z2, 0],
        [0, 0, 0, 1 / z2],
        [-a * b2 / e2, -b2 / e2, -((a + b2) * z2 - 2 * b2 + 1) / (z2 * e2), -1 / e2],
        [a * b1 * b2 * z1 / (e2 * tri),
         -b2 * ((a - 2 * b1 + 1) * z2 - b1 * z1 - a + 2 * b1 - 1) / (e2 * tri),
         b1 * (a - b2 + 1) * z1 / (e2 * tri),
         w44_2],
    ]
    return m1, m2


def hyp2f1_coefficient(b1, b2, lam) -> list[list]:
    """Coefficient of dΛ for the vector (f, Λ f') with f = 2F1(α, β2; β1+1/2; Λ²)."""
    sq = lam * lam - 1
    return [
        [0, 1 / lam],
        [-2 * (2 * b1 + 2 * b2 - 1) * b2 * lam / sq,
         -((2 * b1 + 4 * b2 - 1) * lam * lam - 2 * b1 + 1) / (lam * sq)],
    ]


def _kron(a: list[list], b: list[list]) -> list[list]:
    n, m = len(a), len(b)
    return [[a[i // m][j // m] * b[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def tensor_coefficients(b1, b2, lam1, lam2) -> tuple[list[list], list[list]]:
    """
    Coefficients of dΛ1 and dΛ2 for H = h(Λ1) ⊗ h(Λ2), component a + 2b holding h_a(Λ1)·h_b(Λ2).

    Assembled as I ⊗ Ω(Λ1) and Ω(Λ2) ⊗ I.
    """
    eye = [[1, 0], [0, 1]]
    return (_kron(eye, hyp2f1_coefficient(b1, b2, lam1)),
            _kron(hyp2f1_coefficient(b1, b2, lam2), eye))


def _check_points(label: str, values: dict[str, complex]) -> None:
    for name, v in values.items():
        if abs(v) < LOCUS_TOL:
            raise SingularLocus(f"{label}: {name} vanishes at this point")


def _as_array(rows: list[list]) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in rows], dtype=complex)


def omega_f2_at(beta1: float, beta2: float, z1: complex, z2: complex) -> ConnectionForm:
    """
    Evaluate the F2 connection at (z1, z2).

    Raises
    ------
    SingularLocus
        Within 1e-8 of one of the lines z1=0, z2=0, z1=1, z2=1, z1+z2=1.
    """
    z1, z2 = complex(z1), complex(z2)
    _check_points('F2 connection', {'z1': z1, 'z2': z2, 'z1-1': z1 - 1, 'z2-1': z2 - 1,
                                    'z1+z2-1': z1 + z2 - 1})
    m1, m2 = f2_coefficients(beta1, beta2, z1, z2)
    return ConnectionForm(dim=4, coeff=[_as_array(m1), _as_array(m2)], coords=('z1', 'z2'))


def omega_2f1_at(beta1: float, beta2: float, lam: complex) -> ConnectionForm:
    lam = complex(lam)
    _check_points('2F1 connection', {'Λ': lam, 'Λ-1': lam - 1, 'Λ+1': lam + 1})
    return ConnectionForm(dim=2, coeff=[_as_array(hyp2f1_coefficient(beta1, beta2, lam))], coords=('L',))


def omega_tensor_at(beta1: float, beta2: float, lam1: complex, lam2: complex) -> ConnectionForm:
    """Connection of the outer tensor product, assembled from two 2F1 connections."""
    first = omega_2f1_at(beta1, beta2, lam1).coeff[0]
    second = omega_2f1_at(beta1, beta2, lam2).coeff[0]
    eye = np.eye(2)
    return ConnectionForm(dim=4, coeff=[np.kron(eye, first), np.kron(second, eye)], coords=('L1', 'L2'))


def f2_singular_distance(point) -> float:
    z1, z2 = complex(point[0]), complex(point[1])
    return min(abs(z1), abs(z2), abs(z1 - 1), abs(z2 - 1), abs(z1 + z2 - 1) / np.sqrt(2))


def curl_residual(coefficients, point: tuple[complex, complex], step: float = 1e-5) -> float:
    """
    Max-norm of ∂2 M1 - ∂1 M2 + [M1, M2] at a point.

    Derivatives are central differences improved by one Richardson step.

    Parameters
    ----------
    coefficients : callable (x1, x2) -> (M1, M2) numpy matrices
    point : evaluation point
    step : finite-difference step
    """
    x1, x2 = complex(point[0]), complex(point[1])

    def derivative(index: int, which: int) -> np.ndarray:
        def central(h: float) -> np.ndarray:
            dx = (h, 0) if index == 0 else (0, h)
            plus = coefficients(x1 + dx[0], x2 + dx[1])[which]
            minus = coefficients(x1 - dx[0], x2 - dx[1])[which]
            return (plus - minus) / (2 * h)
        return (4 * central(step / 2) - central(step)) / 3

    m1, m2 = coefficients(x1, x2)
    curl = derivative(1, 0) - derivative(0, 1) + m1 @ m2 - m2 @ m1
    residual = float(np.max(np.abs(curl)))
    logger.debug(f"curl residual at ({x1:.4g}, {x2:.4g}) = {residual:.3e}")
    return residual
