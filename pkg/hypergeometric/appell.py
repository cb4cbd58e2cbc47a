"""Appell's F2: double series, double Euler integral and the integral transform to 2F1."""

import logging
from typing import Literal

import numpy as np

from misc.errors import DomainError, NoConvergence
from models.numbers import QuadratureSpec
from models.params import AppellF2Params, Hyp2F1Params
from numerics.complex_ops import cpow
from numerics.gamma import gamma, rgamma
from numerics.quadrature import integrate_singular
from hypergeometric.series import SERIES_TOL, eval_2f1_many, pochhammer

logger = logging.getLogger(__name__)

F2_SERIES_RADIUS = 0.95
MAX_DIAGONALS = 5000
SIMPLEX_MARGIN = 1e-3

INNER_SPEC = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-12, max_level=12)
OUTER_SPEC = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-11, max_level=12)


def _f2_series(p: AppellF2Params, z1: complex, z2: complex) -> complex:
    """Sum the double series diagonal by diagonal in m + n."""
    diagonal = np.array([1 + 0j])
    total = 0j
    small = 0
    previous_mag = None
    for N in range(MAX_DIAGONALS):
        s = diagonal.sum()
        total += s
        mag = float(np.abs(diagonal).sum())
        if mag == 0:
            return total
        small = small + 1 if mag <= SERIES_TOL * abs(total) else 0
        if small >= 3 and previous_mag:
            ratio = mag / previous_mag
            if ratio < 1 and mag * ratio / (1 - ratio) <= SERIES_TOL * abs(total):
                logger.debug(f"F2 series converged after {N + 1} diagonals")
                return total
        previous_mag = mag
        # diagonal[m] holds the term with (m, N - m); step n -> n + 1 for every m and add m = N + 1
        m = np.arange(N + 1)
        n = N - m
        step_n = diagonal * (p.alpha + N) * (p.beta2 + n) / ((p.gamma2 + n) * (n + 1)) * z2
        last = diagonal[-1] * (p.alpha + N) * (p.beta1 + N) / ((p.gamma1 + N) * (N + 1)) * z1
        diagonal = np.append(step_n, last)
    raise NoConvergence(f"F2 series at ({z1}, {z2}) did not converge in {MAX_DIAGONALS} diagonals")


def euler_admissible(p: AppellF2Params, z1: complex, z2: complex) -> bool:
    """
    True when the double Euler integral represents the principal branch at (z1, z2).

    The values 1 - z1 x - z2 u over the unit square fill the parallelogram spanned by
    its four corners; it has to stay clear of the cut (-inf, 0].
    """
    if not (p.gamma1.real > p.beta1.real > 0 and p.gamma2.real > p.beta2.real > 0):
        return False
    corners = np.array([1, 1 - z1, 1 - z2, 1 - z1 - z2], dtype=complex)
    if np.all(corners.real > SIMPLEX_MARGIN):
        return True
    return bool(np.all(corners.imag > SIMPLEX_MARGIN) or np.all(corners.imag < -SIMPLEX_MARGIN))


def _f2_euler(p: AppellF2Params, z1: complex, z2: complex) -> complex:
    a = p.alpha
    b1, b2, g1, g2 = p.beta1, p.beta2, p.gamma1, p.gamma2
    ex, ecx = b1.real - 1, (g1 - b1).real - 1
    eu, ecu = b2.real - 1, (g2 - b2).real - 1
    ix, icx = b1 - 1 - ex, g1 - b1 - 1 - ecx
    iu, icu = b2 - 1 - eu, g2 - b2 - 1 - ecu

    def outer(u: np.ndarray) -> np.ndarray:
        def inner(x: np.ndarray) -> np.ndarray:
            values = np.power(1 - z1 * x[:, None] - z2 * u[None, :], -a)
            if ix:
                values = values * np.power(x, ix)[:, None]
            if icx:
                values = values * np.power(1 - x, icx)[:, None]
            return values

        values = np.atleast_1d(integrate_singular(inner, 0, 1, ex, ecx, INNER_SPEC))
        if iu:
            values = values * np.power(u, iu)
        if icu:
            values = values * np.power(1 - u, icu)
        return values

    scale = gamma(g1) * gamma(g2) * rgamma(b1) * rgamma(b2) * rgamma(g1 - b1) * rgamma(g2 - b2)
    return scale * complex(integrate_singular(outer, 0, 1, eu, ecu, OUTER_SPEC))


def eval_f2(p: AppellF2Params, z1: complex, z2: complex,
            route: Literal['auto', 'series', 'euler'] = 'auto') -> complex:
    """
    Principal branch of F2(α; β1, β2; γ1, γ2; z1, z2).

    Parameters
    ----------
    p : Appell parameters
    z1, z2 : arguments; the double series is used when |z1| + |z2| <= 0.95 and the
        double Euler integral otherwise (Re γi > Re βi > 0 and the integration
        square mapped off the cut)
    route : force one of the two routes

    Returns
    -------
    complex value
    """
    z1, z2 = complex(z1), complex(z2)
    in_disk = abs(z1) + abs(z2) <= F2_SERIES_RADIUS
    if route == 'series' or (route == 'auto' and in_disk):
        if not in_disk:
            raise DomainError(f"F2 series needs |z1|+|z2| <= {F2_SERIES_RADIUS}, got {abs(z1) + abs(z2):.4f}")
        return _f2_series(p, z1, z2)
    if not euler_admissible(p, z1, z2):
        raise DomainError(f"F2 at ({z1}, {z2}) is outside the series disk and the Euler-integral region")
    logger.debug(f"F2 at ({z1:.4g}, {z2:.4g}) by the double Euler integral")
    return _f2_euler(p, z1, z2)


def f2_euler_transform(p: AppellF2Params, A: complex, B: complex, spec: QuadratureSpec | None = None) -> complex:
    """
    A^(-α)·F2(α; β1, β2; γ1, γ2; 1/A, 1 - B/A) through the 2F1 integral transform.

    Along U = A + (B - A)s the powers of (A - U) and (U - B) split off powers of
    (A - B) that cancel the prefactor, leaving a Beta-weighted integral over s in [0, 1].
    """
    if not p.gamma2.real > p.beta2.real > 0:
        raise DomainError(f"Integral transform needs Re(γ2) > Re(β2) > 0, got {p}")
    A, B = complex(A), complex(B)
    if A == B:
        raise DomainError("The integral transform needs A != B")
    inner = Hyp2F1Params(a=p.alpha, b=p.beta1, c=p.gamma1)
    e0, e1 = p.beta2.real - 1, (p.gamma2 - p.beta2).real - 1
    i0, i1 = p.beta2 - 1 - e0, p.gamma2 - p.beta2 - 1 - e1

    def integrand(s: np.ndarray) -> np.ndarray:
        U = A + (B - A) * s
        if np.any((np.abs(U.imag) < 1e-15) & (U.real >= 0) & (U.real <= 1)):
            raise DomainError(f"Segment [{A}, {B}] meets [0, 1]")
        values = np.power(U, -p.alpha) * eval_2f1_many(inner, 1 / U)
        if i0:
            values = values * np.power(s, i0)
        if i1:
            values = values * np.power(1 - s, i1)
        return values

    scale = gamma(p.gamma2) * rgamma(p.beta2) * rgamma(p.gamma2 - p.beta2)
    return scale * complex(integrate_singular(integrand, 0, 1, e0, e1, spec or OUTER_SPEC))


def linear_transform_params(which: int, p: AppellF2Params):
    """
    Parameters and (A, B) map of the two linear transformations of F2.

    which=1 sends β2 to γ2 - β2 with (A, B) -> (B, A); which=2 sends β1 to γ1 - β1
    with (A, B) -> (1 - A, 1 - B). Both are involutions.
    """
    if which == 1:
        q = AppellF2Params(alpha=p.alpha, beta1=p.beta1, beta2=p.gamma2 - p.beta2,
                           gamma1=p.gamma1, gamma2=p.gamma2)
        return q, lambda A, B: (B, A)
    if which == 2:
        q = AppellF2Params(alpha=p.alpha, beta1=p.gamma1 - p.beta1, beta2=p.beta2,
                           gamma1=p.gamma1, gamma2=p.gamma2)
        return q, lambda A, B: (1 - A, 1 - B)
    raise ValueError(f"Linear transformation must be 1 or 2, got {which}")


def linear_transform_value(which: int, p: AppellF2Params, A: complex, B: complex) -> tuple[complex, complex]:
    """Both sides of the chosen linear transformation identity at (A, B)."""
    A, B = complex(A), complex(B)
    lhs = cpow(A, -p.alpha) * eval_f2(p, 1 / A, 1 - B / A)
    q, move = linear_transform_params(which, p)
    A2, B2 = move(A, B)
    if which == 1:
        rhs = cpow(A2, -p.alpha) * eval_f2(q, 1 / A2, 1 - B2 / A2)
    else:
        rhs = cpow(A - 1, -p.alpha) * eval_f2(q, 1 / A2, 1 - B2 / A2)
    return lhs, rhs


def eval_f2_unit_z2(p: AppellF2Params, z1: complex) -> complex:
    """
    F2 on the boundary z2 = 1 as Σ_m (α)_m (β1)_m/((γ1)_m m!) z1^m · 2F1(α+m, β2; γ2; 1).

    Each inner sum is taken in closed form by Gauss' theorem, which requires
    Re(γ2 - α - β2 - m) > 0 for every m that contributes; the outer series must
    therefore terminate.

    Raises
    ------
    DomainError
        When the outer series does not terminate or a needed Gauss sum diverges.
    """
    stop = None
    for k in range(0, 200):
        if abs(p.alpha + k) < 1e-12 or abs(p.beta1 + k) < 1e-12:
            stop = k + 1
            break
    if stop is None:
        raise DomainError("The m-series at z2=1 does not terminate, so its Gauss-summed form diverges")
    total = 0j
    for m in range(stop):
        excess = p.gamma2 - p.alpha - p.beta2 - m
        if excess.real <= 0:
            raise DomainError(f"Gauss sum 2F1(α+{m}, β2; γ2; 1) diverges (Re excess {excess.real:.3g})")
        gauss = gamma(p.gamma2) * gamma(excess) * rgamma(p.gamma2 - p.alpha - m) * rgamma(p.gamma2 - p.beta2)
        term = pochhammer(p.alpha, m) * pochhammer(p.beta1, m) / (pochhammer(p.gamma1, m) * gamma(m + 1))
        total += term * complex(z1) ** m * gauss
    return total
