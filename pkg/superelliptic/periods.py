"""
Periods of dx/y on SE(λ)_{r,p,q} over the cycles a_k and b_k.

The closed forms are Gamma-factor multiples of 2F1 values; the quadrature
oracle integrates the multivalued integrand along the real segments [0, λ] and
[λ, 1] with the branch y = x^(β1+β2-1/2) (1-x)^(1-β2) (λ-x)^(1-β2).
"""

import cmath
import logging
import math
from typing import Literal

import numpy as np

from misc.errors import DomainError
from models.curves import CurveSignature
from models.numbers import QuadratureSpec
from numerics.complex_ops import cpow
from numerics.gamma import gamma
from numerics.quadrature import integrate_singular
from hypergeometric.series import hyp2f1
from superelliptic.curves import cycle_constant

logger = logging.getLogger(__name__)

Cycle = Literal['A', 'B']

ORACLE_SPEC = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-13, max_level=13)


def _check_k(sig: CurveSignature, k: int) -> None:
    if not 1 <= k <= 2 * sig.r - 1:
        raise ValueError(f"Cycle index k={k} outside 1..{2 * sig.r - 1}")


def _check_lambda(lam: complex) -> complex:
    lam = complex(lam)
    if lam == 0 or lam == 1:
        raise DomainError(f"λ = {lam} is a degenerate curve modulus")
    return lam


def period_closed(sig: CurveSignature, cycle: Cycle, k: int, lam: complex) -> complex:
    """
    Period of dx/y over a_k ('A') or b_k ('B') on the principal branches.

    The partner curve (r, 2r-p, 2r-q) needs no separate formula: its own
    exponents are 1 - β1 and 1 - β2.

    Raises
    ------
    DomainError
        When λ is 0 or 1, or a 2F1 argument falls outside the evaluation routes.
    PoleError
        When a Gamma factor sits on a pole.
    """
    _check_k(sig, k)
    lam = _check_lambda(lam)
    b1, b2 = float(sig.beta1), float(sig.beta2)
    c = cycle_constant(sig.r, k)
    if cycle == 'A':
        front = gamma(1.5 - b1 - b2) * gamma(b2) / gamma(1.5 - b1)
        return c * front * cpow(lam, 0.5 - b1) * hyp2f1(1.5 - b1 - b2, 1 - b2, 1.5 - b1, lam)
    if cycle == 'B':
        phase = cmath.exp(1j * math.pi * b2)
        front = gamma(b2) ** 2 / gamma(2 * b2)
        return phase * c * front * cpow(1 - lam, 2 * b2 - 1) * hyp2f1(b1 + b2 - 0.5, b2, 2 * b2, 1 - lam)
    raise ValueError(f"Unknown cycle {cycle!r}")


def period_quadrature(sig: CurveSignature, cycle: Cycle, k: int, lam: float,
                      spec: QuadratureSpec | None = None) -> complex:
    """
    The same period by tanh-sinh on the real segment, for real 0 < λ < 1.

    The A-cycle integrates over [0, λ] and the b-cycle over [λ, 1]; the phase of
    the b-cycle comes from crossing the cut of (λ - x)^(1-β2).
    """
    _check_k(sig, k)
    if isinstance(lam, complex) and lam.imag != 0 or not 0 < float(np.real(lam)) < 1:
        raise DomainError(f"The quadrature oracle needs real 0 < λ < 1, got {lam}")
    lam = float(np.real(lam))
    spec = spec or ORACLE_SPEC
    b1, b2 = float(sig.beta1), float(sig.beta2)
    alpha = b1 + b2 - 0.5
    c = cycle_constant(sig.r, k)
    if cycle == 'A':
        ea, eb = -alpha, b2 - 1
        integral = integrate_singular(lambda x: (1 - x) ** (b2 - 1), 0.0, lam, ea, eb, spec)
        value = lam ** (ea + eb) * integral
        logger.debug(f"a-cycle quadrature for ({sig}) at λ={lam}: {value:.15g}")
        return c * value
    if cycle == 'B':
        integral = integrate_singular(lambda x: x ** (-alpha), lam, 1.0, b2 - 1, b2 - 1, spec)
        value = (1 - lam) ** (2 * b2 - 2) * integral
        logger.debug(f"b-cycle quadrature for ({sig}) at λ={lam}: {value:.15g}")
        return cmath.exp(1j * math.pi * b2) * c * value
    raise ValueError(f"Unknown cycle {cycle!r}")


def tau_ratio(sig: CurveSignature, lam: complex, k: int = 1) -> complex:
    """
    Period ratio τ = ∮_b dx/y / ∮_a dx/y.

    Raises
    ------
    ZeroDivisionError
        When the a-period vanishes.
    """
    a = period_closed(sig, 'A', k, lam)
    if a == 0:
        raise ZeroDivisionError(f"a-period vanishes at λ={lam}")
    return period_closed(sig, 'B', k, lam) / a


def cycle_constant_residual(r: int, i: int, j: int, k: int) -> float:
    """|C_(j+r+1-k)·C_(i+k-1) + C_i·C_j|, indices taken as exponents of ρ."""
    lhs = cycle_constant(r, j + r + 1 - k) * cycle_constant(r, i + k - 1)
    return abs(lhs + cycle_constant(r, i) * cycle_constant(r, j))
