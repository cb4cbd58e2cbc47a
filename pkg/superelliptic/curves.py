"""
Signatures, genus and local data of the superelliptic curves

    SE(λ)_{r,p,q}:  y^(2r) = x^(p+q-r) (x-1)^(2r-p) (x-λ)^(2r-p).
"""

import cmath
import logging
import math

from misc.errors import ConstraintViolation
from models.curves import BranchConstants, CurveSignature, PuiseuxRecord, signature_violation

logger = logging.getLogger(__name__)


def validate_signature(r: int, p: int, q: int) -> CurveSignature:
    """
    Check the range and divisibility constraints of (r, p, q).

    Raises
    ------
    ConstraintViolation
        Naming the first failed constraint in `which`.
    """
    which = signature_violation(r, p, q)
    if which is not None:
        raise ConstraintViolation(which, f"Signature ({r},{p},{q}) violates {which}")
    return CurveSignature(r=r, p=p, q=q)


def genus(sig: CurveSignature) -> int:
    return 2 * sig.r - 1


def quotient_genus(sig: CurveSignature) -> int:
    """Genus of the quotient by the involution (x, y) -> (x, -y), the curve with exponent r on y."""
    return sig.r - 1


def puiseux_table(sig: CurveSignature) -> list[PuiseuxRecord]:
    """Multiplicities and Puiseux pairs at x = 0, 1, λ, ∞ of the plane model."""
    r, p, q = sig.as_tuple()
    return [
        PuiseuxRecord(point='0', multiplicity=p + q - r, pair=(2 * r, p + q - r)),
        PuiseuxRecord(point='1', multiplicity=2 * r - p, pair=(2 * r, 2 * r - p)),
        PuiseuxRecord(point='lambda', multiplicity=2 * r - p, pair=(2 * r, 2 * r - p)),
        PuiseuxRecord(point='infinity', multiplicity=r - p + q, pair=(3 * r - p + q, r - p + q)),
    ]


def quotient_puiseux_table(sig: CurveSignature) -> list[PuiseuxRecord]:
    """
    The same data for the quotient curve y^r = x^(p+q-r) (x-1)^(2r-p) (x-λ)^(2r-p).

    Local parameters of the quotient are the squares of those of the curve itself.
    """
    r, p, q = sig.as_tuple()
    return [
        PuiseuxRecord(point='0', multiplicity=p + q - r, pair=(r, p + q - r)),
        PuiseuxRecord(point='1', multiplicity=2 * r - p, pair=(r, 2 * r - p)),
        PuiseuxRecord(point='lambda', multiplicity=2 * r - p, pair=(r, 2 * r - p)),
        PuiseuxRecord(point='infinity', multiplicity=r - p + q, pair=(3 * r - p + q, 2 * r - p + q)),
    ]


def cycle_constant(r: int, k: int) -> complex:
    """C_k = (ρ - 1)/ρ^k with ρ = exp(2πi/2r)."""
    rho = cmath.exp(1j * math.pi / r)
    return (rho - 1) / rho ** k


def branch_constants(sig: CurveSignature) -> BranchConstants:
    return BranchConstants(beta1=sig.beta1, beta2=sig.beta2,
                           cycle_constants=[cycle_constant(sig.r, k) for k in range(1, 2 * sig.r)],
                           phase=cmath.exp(1j * math.pi * float(sig.beta2)))


def swapped(sig: CurveSignature) -> CurveSignature:
    return sig.swapped()


def enumerate_signatures(r_max: int) -> list[CurveSignature]:
    """Every valid (r, p, q) with r <= r_max, ordered by r, then p, then q."""
    found = [CurveSignature(r=r, p=p, q=q)
             for r in range(1, r_max + 1)
             for p in range(1, 2 * r)
             for q in range(1, 2 * r)
             if signature_violation(r, p, q) is None]
    logger.debug(f"{len(found)} valid signatures with r <= {r_max}")
    return found
