"""Inverting the period ratio of SE(λ)_{1,1,1} through the squared theta quotient."""

import cmath
import logging
import math

import numpy as np

from misc.errors import DomainError
from models.curves import CurveSignature
from models.reports import IdentityReport
from numerics.theta import modulus_series, squared_theta_quotient
from superelliptic.periods import tau_ratio
from identities.clausen import as_json, with_checks

logger = logging.getLogger(__name__)

LEGENDRE = CurveSignature(r=1, p=1, q=1)
MIRROR_TOL = 1e-9
COEFFICIENT_TOL = 1e-12
LAMBDA_WINDOW = (0.0, 0.2)

# coefficients of Λ at q^(1/4), q^(3/4), q^(5/4) with q = exp(2πiτ)
EXPECTED_COEFFICIENTS = (4, -16, 56)


def modulus_coefficients(count: int = 3) -> np.ndarray:
    """Coefficients of Λ = (ϑ2/ϑ3)² at q^(1/4), q^(3/4), ... from the theta expansions."""
    return 4 * modulus_series(count - 1)


def small_modulus_expansion(lam_root: complex) -> complex:
    """4 ln Λ - 8 ln 2 + Λ² + (13/32)Λ⁴, the start of 2πiτ in powers of Λ."""
    L = complex(lam_root)
    return 4 * cmath.log(L) - 8 * math.log(2) + L ** 2 + 13 / 32 * L ** 4


def mirror_map_check(lam: float, tolerance: float = MIRROR_TOL) -> IdentityReport:
    """
    Recover √λ from the period ratio of SE(λ)_{1,1,1}.

    τ is the ratio of the b- and a-periods, so the theta nome is exp(iπτ) and
    q = exp(2πiτ). The report compares (ϑ2/ϑ3)² with √λ; the expansion coefficients
    and the small-Λ expansion of 2πiτ are auxiliary checks.

    Raises
    ------
    DomainError
        When λ is not real in (0, 0.2).
    """
    lo, hi = LAMBDA_WINDOW
    if isinstance(lam, complex) or not lo < float(lam) < hi:
        raise DomainError(f"Mirror map check needs real λ in ({lo}, {hi}), got {lam}")
    lam = float(lam)
    root = math.sqrt(lam)
    tau = tau_ratio(LEGENDRE, lam)
    recovered = squared_theta_quotient(tau)
    coeffs = modulus_coefficients(len(EXPECTED_COEFFICIENTS))
    two_pi_i_tau = 2j * math.pi * tau
    expansion_gap = abs(two_pi_i_tau - small_modulus_expansion(root))
    checks = {
        'coefficient_gap': float(np.max(np.abs(coeffs - np.array(EXPECTED_COEFFICIENTS)))),
        'expansion_excess': max(0.0, expansion_gap - 50 * root ** 6),
    }
    report = IdentityReport.compare('mirror-map', recovered, root, tolerance,
                                    {'lambda': lam, 'tau': as_json(tau),
                                     'q': as_json(cmath.exp(2j * math.pi * tau)),
                                     'expansion_gap': expansion_gap})
    report = with_checks(report, checks, COEFFICIENT_TOL)
    logger.info(report.insight)
    return report
