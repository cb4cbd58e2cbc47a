"""
Moduli (A, B) of the twisted pencils in terms of (Λ1, Λ2), and the scalar relating
du ∧ dx/y to the product two-form on S_0.

The functions take numbers or exact ring elements alike; every formula only uses
field operations with rational constants.
"""

import logging
from fractions import Fraction

from misc.errors import SingularLocus
from models.curves import CurveSignature
from models.surfaces import ModuliPoint
from numerics.complex_ops import checked, cpow

logger = logging.getLogger(__name__)


def ab_from_lambdas(lam1, lam2):
    """A = (Λ1+Λ2)²/(4Λ1Λ2), B = (Λ1Λ2+1)²/(4Λ1Λ2)."""
    P = lam1 * lam2
    return (lam1 + lam2) * (lam1 + lam2) / (4 * P), (P + 1) * (P + 1) / (4 * P)


def ab_j6_from_lambdas(lam1, lam2):
    """A = (Λ1Λ2+1)²/((Λ1²-1)(Λ2²-1)), B = (Λ1Λ2-1)²/((Λ1²-1)(Λ2²-1))."""
    P = lam1 * lam2
    d = (lam1 * lam1 - 1) * (lam2 * lam2 - 1)
    return (P + 1) * (P + 1) / d, (P - 1) * (P - 1) / d


def _is_exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def moduli_AB(mp: ModuliPoint | tuple) -> tuple:
    """
    Moduli (A, B) of the twisted fibration.

    A tuple of two rationals returns exact Fractions; a ModuliPoint returns complex values.
    """
    if isinstance(mp, ModuliPoint):
        A, B = ab_from_lambdas(mp.Lambda1, mp.Lambda2)
        return checked(A), checked(B)
    lam1, lam2 = (Fraction(v) for v in mp) if _is_exact(*mp) else (complex(v) for v in mp)
    if lam1 * lam2 == 0:
        raise SingularLocus("moduli_AB needs Λ1Λ2 != 0")
    return ab_from_lambdas(lam1, lam2)


def moduli_AB_j6(mp: ModuliPoint | tuple) -> tuple:
    """Moduli of the twisted Legendre pencil whose pull-back is the J6 fibration."""
    if isinstance(mp, ModuliPoint):
        A, B = ab_j6_from_lambdas(mp.Lambda1, mp.Lambda2)
        return checked(A), checked(B)
    lam1, lam2 = (Fraction(v) for v in mp) if _is_exact(*mp) else (complex(v) for v in mp)
    if (lam1 * lam1 - 1) * (lam2 * lam2 - 1) == 0:
        raise SingularLocus("moduli_AB_j6 needs Λ1² != 1 and Λ2² != 1")
    return ab_j6_from_lambdas(lam1, lam2)


def two_form_scale(sig: CurveSignature, mp: ModuliPoint) -> complex:
    """
    2^(2-2p/r) Λ1^(3/2-p/2r-q/2r) Λ2^(1/2-p/2r+q/2r) / (Λ1²-1)^(1-p/r), principal branches.
    """
    r, p, q = sig.as_tuple()
    l1, l2 = mp.Lambda1, mp.Lambda2
    e1 = 1.5 - (p + q) / (2 * r)
    e2 = 0.5 - (p - q) / (2 * r)
    ed = 1 - p / r
    value = 2 ** (2 - 2 * p / r) * cpow(l1, e1) * cpow(l2, e2) / cpow(l1 * l1 - 1, ed)
    return checked(value)


def scale_consistency(sig: CurveSignature, mp: ModuliPoint) -> tuple[complex, complex]:
    """
    Both sides of scale·(A-B)^(1-2β2) = (Λ1Λ2)^α Λ1^(1-2β1) (1-Λ2²)^(1-2β2).

    Principal branches agree on real moduli in (0, 1)².
    """
    b1, b2 = float(sig.beta1), float(sig.beta2)
    alpha = b1 + b2 - 0.5
    A, B = moduli_AB(mp)
    l1, l2 = mp.Lambda1, mp.Lambda2
    lhs = two_form_scale(sig, mp) * cpow(A - B, 1 - 2 * b2)
    rhs = cpow(l1 * l2, alpha) * cpow(l1, 1 - 2 * b1) * cpow(1 - l2 * l2, 1 - 2 * b2)
    return lhs, rhs


def duality_row_values(n: int, lam1, lam2) -> dict:
    """
    The (A, B, z1, z2, h) entries of one row of the duality table.

    Rows 2, 3 and 4 are row 1 after Λ1 ↦ -Λ1, 1/Λ1 and -1/Λ1; h is the factor with
    F2(z1, z2) = h^(2α) · 2F1(α, β2; β1+1/2; Λ1²) · 2F1(α, β2; 2β2; 1-Λ2²).
    """
    P = lam1 * lam2
    d = (lam1 * lam1 - 1) * (lam2 * lam2 - 1)
    if n == 1:
        s = lam1 + lam2
        A, B, z1, z2, h = s * s / (4 * P), (P + 1) * (P + 1) / (4 * P), 4 * P / (s * s), -d / (s * s), s
    elif n == 2:
        s = lam1 - lam2
        A, B, z1, z2, h = -s * s / (4 * P), -(P - 1) * (P - 1) / (4 * P), -4 * P / (s * s), -d / (s * s), -s
    elif n == 3:
        s = P + 1
        t = lam1 + lam2
        A, B, z1, z2, h = s * s / (4 * P), t * t / (4 * P), 4 * P / (s * s), d / (s * s), s
    elif n == 4:
        s = P - 1
        t = lam1 - lam2
        A, B, z1, z2, h = -s * s / (4 * P), -t * t / (4 * P), -4 * P / (s * s), d / (s * s), -s
    else:
        raise ValueError(f"Duality rows are numbered 1..4, got {n}")
    return {'A': A, 'B': B, 'z1': z1, 'z2': z2, 'h': h}


# Λ1 substitution carrying row 1 to row n
DUALITY_SUBSTITUTIONS = {
    1: lambda lam1: lam1,
    2: lambda lam1: -lam1,
    3: lambda lam1: 1 / lam1,
    4: lambda lam1: -1 / lam1,
}
