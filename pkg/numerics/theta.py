"""
Jacobi theta constants as truncated q-series in the nome q = exp(iπτ).

Only the values at z = 0 are needed: ϑ2 = 2q^(1/4)·Σ_(n>=0) q^(n(n+1)) and
ϑ3 = 1 + 2·Σ_(n>=1) q^(n²). The quarter power is passed in separately so that
callers keep control of the branch.
"""

import logging
import math

import numpy as np
from numpy.polynomial import polynomial as P

from misc.errors import DomainError, NoConvergence

logger = logging.getLogger(__name__)

THETA_TOL = 1e-17
MAX_TERMS = 200
NOME_LIMIT = 0.9


def _check_nome(q: complex) -> complex:
    q = complex(q)
    if abs(q) >= NOME_LIMIT:
        raise DomainError(f"Theta q-series needs |q| < {NOME_LIMIT}, got |q| = {abs(q):.4f}")
    return q


def _lacunary_sum(q: complex, exponent) -> complex:
    total = 0j
    for n in range(MAX_TERMS):
        term = q ** exponent(n)
        total += term
        if n > 0 and abs(term) <= THETA_TOL * max(abs(total), 1.0):
            return total
    raise NoConvergence(f"Theta series at q = {q} did not settle in {MAX_TERMS} terms")


def theta2(q: complex, q_quarter: complex | None = None) -> complex:
    """
    ϑ2(0|τ) for the nome q.

    Parameters
    ----------
    q : nome exp(iπτ), |q| < 0.9
    q_quarter : q^(1/4) on the branch exp(iπτ/4); principal branch if omitted
    """
    q = _check_nome(q)
    quarter = complex(q_quarter) if q_quarter is not None else q ** 0.25
    return 2 * quarter * _lacunary_sum(q, lambda n: n * (n + 1))


def theta3(q: complex) -> complex:
    """ϑ3(0|τ) for the nome q."""
    q = _check_nome(q)
    return 1 + 2 * (_lacunary_sum(q, lambda n: (n + 1) ** 2))


def theta_coefficients(which: int, order: int) -> np.ndarray:
    """
    Integer coefficients of ϑ2/(2q^(1/4)) (which=2) or ϑ3 (which=3) up to q^order.
    """
    coeffs = np.zeros(order + 1, dtype=np.int64)
    if which == 2:
        n = 0
        while n * (n + 1) <= order:
            coeffs[n * (n + 1)] += 1
            n += 1
    elif which == 3:
        coeffs[0] = 1
        n = 1
        while n * n <= order:
            coeffs[n * n] += 2
            n += 1
    else:
        raise ValueError(f"Only ϑ2 and ϑ3 are tabulated, got {which}")
    return coeffs


def series_inverse(coeffs: np.ndarray, order: int) -> np.ndarray:
    """Coefficients of 1/f up to x^order for a power series f with f(0) != 0."""
    c = np.asarray(coeffs, dtype=float)
    if c[0] == 0:
        raise ZeroDivisionError("Power series with vanishing constant term has no inverse")
    inv = np.zeros(order + 1)
    inv[0] = 1 / c[0]
    for n in range(1, order + 1):
        upper = min(n, len(c) - 1)
        inv[n] = -sum(c[k] * inv[n - k] for k in range(1, upper + 1)) / c[0]
    return inv


def modulus_series(order: int) -> np.ndarray:
    """
    Coefficients of (ϑ2/ϑ3)² / (4q^(1/2)) as a power series in the nome, up to q^order.

    The leading terms are 1, -4, 14, -40, 101.
    """
    num = P.polymul(theta_coefficients(2, order), theta_coefficients(2, order))[:order + 1]
    den = P.polymul(theta_coefficients(3, order), theta_coefficients(3, order))[:order + 1]
    out = P.polymul(num, series_inverse(den, order))[:order + 1]
    logger.debug(f"modulus series to order {order}: {out[:5]}")
    return out


def squared_theta_quotient(tau: complex) -> complex:
    """
    (ϑ2(τ)/ϑ3(τ))² with the nome exp(iπτ) and q^(1/4) = exp(iπτ/4).

    Raises
    ------
    DomainError
        When τ is not in the upper half plane or the nome is too large for the series.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise DomainError(f"τ = {tau} is not in the upper half plane")
    q = np.exp(1j * math.pi * tau)
    quarter = np.exp(0.25j * math.pi * tau)
    return (theta2(q, quarter) / theta3(q)) ** 2
