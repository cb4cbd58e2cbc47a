"""Turn an exact comparison of two ProductForms into a Certificate."""

import cmath
import logging
import math
from fractions import Fraction

from misc.errors import VerificationFailed
from models.reports import Certificate
from ratfunc.product import ProductForm

logger = logging.getLogger(__name__)

BRANCH_TOL = 1e-8


def _point_values(point: dict) -> dict[str, complex]:
    return {k: complex(Fraction(v)) if isinstance(v, (int, Fraction)) else complex(v) for k, v in point.items()}


def branch_spot_check(ratio: ProductForm, order: int, point: dict) -> tuple[int, float]:
    """
    Nearest order-th root of unity to the principal-branch value of ratio at point.

    Returns
    -------
    (index k, |value - exp(2πik/order)|)
    """
    value = ratio.evaluate(_point_values(point))
    k = round(cmath.phase(value) * order / (2 * math.pi)) % order
    residual = abs(value - cmath.exp(2j * math.pi * k / order))
    return k, residual


def certify_equal(kind: str, name: str, lhs: ProductForm, rhs: ProductForm, point: dict,
                  signature: tuple[int, int, int] | None = None,
                  parameters: dict[str, str] | None = None,
                  notes: list[str] | None = None,
                  power: int | None = None,
                  expected_index: int | None = None) -> Certificate:
    """
    Compare lhs and rhs exactly up to a root of unity, then fix the root numerically.

    Both sides may carry fractional exponents. Without power, the quotient is raised
    to the least power N clearing every denominator and compared with ±1 (with 1 alone
    when both sides are rational), first atom by atom and else by expanding the
    surviving atoms. With power, the identity is read as lhs^power = rhs^power and the
    raised quotient must equal 1 exactly. The principal-branch quotient at point then
    identifies which root of unity separates the un-raised sides.

    Parameters
    ----------
    kind : verifier family, e.g. 'fibration'
    name : identity label
    lhs, rhs : the two sides over one FactorBase
    point : rational values of every variable, away from all atoms' zeros
    power : exponent the identity is stated at, e.g. 2r for a fiber equation
    expected_index : k such that lhs = exp(2πik/power)·rhs on the principal branches
    """
    ratio = lhs / rhs
    if power is None:
        verdict, method, residual = ratio.is_one(strict=lhs.is_rational() and rhs.is_rational())
        _, n = ratio.normalized_power()
        # ratio^N is ±1, so the quotient is a 2N-th root of unity
        order = 2 * n
    else:
        raised = ratio ** power
        verdict, method, residual = raised.is_one(strict=True)
        _, n = raised.normalized_power()
        order = power * n
        if expected_index is not None:
            expected_index *= n
    residuals = []
    if not verdict:
        residuals.append(f"{residual.leading_text()} (+{len(residual) - 1} terms)"
                         if residual is not None else ratio.to_text())
    index, branch = branch_spot_check(ratio, order, point) if verdict else (None, None)
    raised_to = n if power is None else power
    logger.info(f"{kind}:{name}{'' if signature is None else f' at {signature}'}: "
                f"{'zero' if verdict else 'NONZERO'} residual after raising to the power {raised_to} ({method})"
                + ('' if index is None else f", root of unity {index}/{order}"))
    return Certificate(kind=kind, id=name, signature=signature, parameters=parameters or {},
                       zero=verdict, residuals=residuals, method=method,
                       branch_residual=branch, branch_index=index, branch_order=order if verdict else None,
                       expected_index=expected_index,
                       notes=[f'power {raised_to}'] + (notes or []))


def branch_mismatch(cert: Certificate) -> str | None:
    """Why the spot check disagrees with the branch the certificate is stated on, if it does."""
    if cert.branch_residual is not None and cert.branch_residual > BRANCH_TOL:
        return f"branch spot check off by {cert.branch_residual:.3e}"
    if cert.expected_index is not None and cert.branch_index is not None \
            and cert.branch_index != cert.expected_index:
        return (f"spot check lands on root of unity {cert.branch_index}/{cert.branch_order}, "
                f"expected {cert.expected_index}/{cert.branch_order}")
    return None


def ensure_zero(cert: Certificate) -> Certificate:
    """Return the certificate, raising VerificationFailed when it does not pass."""
    if not cert.zero:
        raise VerificationFailed(cert.id, cert.residuals[0] if cert.residuals else '?')
    mismatch = branch_mismatch(cert)
    if mismatch:
        raise VerificationFailed(cert.id, mismatch)
    return cert


def merge_certificates(kind: str, name: str, parts: list[Certificate],
                       signature: tuple[int, int, int] | None = None) -> Certificate:
    """Combine several sub-certificates of one identity family into a single record."""
    methods = {c.method for c in parts}
    branches = [c.branch_residual for c in parts if c.branch_residual is not None]
    mismatches = [f"{c.id}: {m}" for c in parts if (m := branch_mismatch(c)) and c.zero]
    return Certificate(kind=kind, id=name, signature=signature,
                       zero=all(c.zero for c in parts) and not mismatches,
                       residuals=[f"{c.id}: {r}" for c in parts for r in c.residuals] + mismatches,
                       method=methods.pop() if len(methods) == 1 else 'mixed',
                       branch_residual=max(branches) if branches else None,
                       notes=[f"{c.id}: {n}" for c in parts for n in c.notes])
