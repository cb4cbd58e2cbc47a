"""
Gauss and Clausen hypergeometric functions by power series and Euler integrals.

Series are summed until three consecutive terms are negligible and the ratio of
the last two terms bounds the geometric tail below the tolerance. Outside the
series disk 2F1 falls back on its Euler integral when the parameters allow it.
"""

import logging

import numpy as np

from misc.errors import DomainError, NoConvergence, PoleError
from models.numbers import QuadratureSpec
from models.params import Hyp2F1Params, near_nonpositive_integer
from numerics.gamma import gamma
from numerics.quadrature import integrate_singular

logger = logging.getLogger(__name__)

SERIES_RADIUS = 0.95
SERIES_TOL = 1e-16
MAX_TERMS = 20000

EULER_SPEC = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-13, max_level=14)


def pochhammer(a: complex, n: int) -> complex:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0:
        raise ValueError(f"Pochhammer symbol needs n >= 0, got {n}")
    result = 1
    for k in range(n):
        result *= a + k
    return result


def pfq_series(upper: list[complex], lower: list[complex], z) -> np.ndarray:
    """
    Sum the generalized hypergeometric series at every entry of z.

    Parameters
    ----------
    upper, lower : numerator and denominator parameters
    z : complex scalar or array with all |z| <= SERIES_RADIUS

    Returns
    -------
    numpy array of the same shape as z
    """
    for b in lower:
        if near_nonpositive_integer(b):
            raise PoleError(f"Lower parameter {b} is a non-positive integer")
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    total = np.zeros_like(z)
    term = np.ones_like(z)
    active = np.ones(z.shape, dtype=bool)
    small = np.zeros(z.shape, dtype=int)
    for n in range(MAX_TERMS):
        total[active] += term[active]
        factor = 1 + 0j
        for a in upper:
            factor *= a + n
        for b in lower:
            factor /= b + n
        factor /= n + 1
        following = term * factor * z
        if factor == 0:
            return total
        mag = np.abs(following)
        small = np.where(mag <= SERIES_TOL * np.abs(total), small + 1, 0)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratio = np.where(np.abs(term) > 0, mag / np.abs(term), 0.0)
            tail = np.where(ratio < 1, mag / np.maximum(1 - ratio, 1e-300), np.inf)
        done = ((small >= 3) & (tail <= SERIES_TOL * np.maximum(np.abs(total), 1e-300))) | (mag == 0)
        active &= ~done
        if not active.any():
            logger.debug(f"series converged after {n + 1} terms")
            return total
        term = following
    raise NoConvergence(f"Hypergeometric series did not converge in {MAX_TERMS} terms")


def _euler_parameters(p: Hyp2F1Params) -> tuple[complex, complex] | None:
    """Return (a, b) with Re c > Re b > 0 so the Euler integral applies, if any."""
    for a, b in ((p.a, p.b), (p.b, p.a)):
        if p.c.real > b.real > 0:
            return a, b
    return None


def _euler_2f1(p: Hyp2F1Params, z: np.ndarray, spec: QuadratureSpec) -> np.ndarray:
    pair = _euler_parameters(p)
    if pair is None:
        raise DomainError(f"Euler integral needs Re(c) > Re(b) > 0, got {p}")
    a, b = pair
    c = p.c
    if np.any((np.abs(z.imag) < 1e-300) & (z.real >= 1)):
        raise DomainError(f"2F1 argument on the branch cut [1, inf): {z}")
    eb, ec = b.real - 1, (c - b).real - 1
    ib, ic = b - 1 - eb, c - b - 1 - ec

    def integrand(x: np.ndarray) -> np.ndarray:
        x = x[:, None]
        values = np.power(1 - z[None, :] * x, -a)
        if ib:
            values = values * np.power(x, ib)
        if ic:
            values = values * np.power(1 - x, ic)
        return values

    scale = gamma(c) / (gamma(b) * gamma(c - b))
    return scale * np.atleast_1d(integrate_singular(integrand, 0, 1, eb, ec, spec))


def eval_2f1_many(p: Hyp2F1Params, z, route: str = 'auto', spec: QuadratureSpec | None = None) -> np.ndarray:
    """Vectorized eval_2f1: series inside the disk, Euler integral elsewhere."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if route not in ('auto', 'series', 'euler'):
        raise ValueError(f"Unknown 2F1 route {route}")
    out = np.empty_like(z)
    inside = np.abs(z) <= SERIES_RADIUS
    if route == 'series':
        if not inside.all():
            raise DomainError(f"2F1 series needs |z| <= {SERIES_RADIUS}, got max |z| = {np.abs(z).max():.4f}")
        return pfq_series([p.a, p.b], [p.c], z)
    if route == 'euler':
        inside = np.zeros(z.shape, dtype=bool)
    if inside.any():
        out[inside] = pfq_series([p.a, p.b], [p.c], z[inside])
    if (~inside).any():
        if _euler_parameters(p) is None:
            raise DomainError(f"2F1{(p.a, p.b, p.c)} at |z| > {SERIES_RADIUS} needs Re(c) > Re(b) > 0")
        out[~inside] = _euler_2f1(p, z[~inside], spec or EULER_SPEC)
    return out


def eval_2f1(p: Hyp2F1Params, z: complex, route: str = 'auto') -> complex:
    """
    Principal branch of 2F1(a, b; c; z).

    Parameters
    ----------
    p : parameters (a, b; c)
    z : argument; |z| <= 0.95 for the series, otherwise off the cut [1, inf)
        with Re(c) > Re(b) > 0 (or the same with a and b exchanged)
    route : 'auto', 'series' or 'euler'

    Raises
    ------
    DomainError
        When neither evaluation route covers (p, z).
    """
    return complex(eval_2f1_many(p, [z], route)[0])


def hyp2f1(a: complex, b: complex, c: complex, z: complex, route: str = 'auto') -> complex:
    return eval_2f1(Hyp2F1Params(a=a, b=b, c=c), z, route)


def eval_3f2(a1: complex, a2: complex, a3: complex, b1: complex, b2: complex, z: complex) -> complex:
    """3F2(a1, a2, a3; b1, b2; z) by its power series, |z| <= 0.95."""
    if abs(z) > SERIES_RADIUS:
        raise DomainError(f"3F2 is evaluated only for |z| <= {SERIES_RADIUS}, got {abs(z):.4f}")
    return complex(pfq_series([a1, a2, a3], [b1, b2], [z])[0])
