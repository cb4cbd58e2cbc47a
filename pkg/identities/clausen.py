"""
Numerical checks of the Multivariate Clausen Identity and its relatives.

With α = β1 + β2 - 1/2 and (z1, z2) the image of (Λ1, Λ2) under the moduli map,
F2(α; β1, β2; 2β1, 2β2; z1, z2) = (Λ1+Λ2)^(2α)·2F1(α, β2; β1+1/2; Λ1²)·2F1(α, β2; 2β2; 1-Λ2²).
"""

import logging
from typing import Any

from misc.errors import DomainError
from models.numbers import ComplexValue
from models.params import AppellF2Params
from models.reports import IdentityReport
from models.surfaces import DualityRow, ModuliPoint
from numerics.complex_ops import cpow, relative_residual
from hypergeometric.appell import F2_SERIES_RADIUS, eval_f2
from hypergeometric.quadratic import kummer_first, kummer_second
from hypergeometric.series import eval_3f2, hyp2f1
from kummer.moduli import duality_row_values
from pfaffian.gauge import moduli_map, moduli_map_T

logger = logging.getLogger(__name__)

SERIES_TOL = 1e-9
RELATION_TOL = 1e-12


def as_json(value: complex) -> dict[str, float]:
    return ComplexValue.from_complex(value).model_dump()


def with_checks(report: IdentityReport, checks: dict[str, float], tolerance: float) -> IdentityReport:
    """
    Attach auxiliary residuals to a report; it passes only if each is within tolerance.
    """
    inputs = dict(report.inputs)
    inputs.update({name: value for name, value in checks.items()})
    failed = [name for name, value in checks.items() if not value <= tolerance]
    if failed:
        logger.info(f"{report.name}: auxiliary checks failed: {', '.join(failed)}")
    return report.model_copy(update={'inputs': inputs, 'passed': report.passed and not failed})


def _f2_params(beta1: float, beta2: float) -> AppellF2Params:
    if not (complex(beta1).real > 0 and complex(beta2).real > 0):
        raise DomainError(f"β1 and β2 need positive real parts, got ({beta1}, {beta2})")
    return AppellF2Params(alpha=beta1 + beta2 - 0.5, beta1=beta1, beta2=beta2,
                          gamma1=2 * beta1, gamma2=2 * beta2)


def clausen_product(beta1: float, beta2: float, lam1: complex, lam2: complex, h: complex,
                    route: str = 'auto') -> complex:
    """h^(2α)·2F1(α, β2; β1+1/2; Λ1²)·2F1(α, β2; 2β2; 1-Λ2²)."""
    alpha = beta1 + beta2 - 0.5
    return (cpow(h, 2 * alpha)
            * hyp2f1(alpha, beta2, beta1 + 0.5, lam1 * lam1, route)
            * hyp2f1(alpha, beta2, 2 * beta2, 1 - lam2 * lam2, route))


def _moduli_inputs(beta1, beta2, mp: ModuliPoint, **extra: Any) -> dict[str, Any]:
    return {'beta1': float(beta1), 'beta2': float(beta2),
            'Lambda1': as_json(mp.Lambda1), 'Lambda2': as_json(mp.Lambda2), **extra}


def verify_multivariate_clausen(beta1: float, beta2: float, mp: ModuliPoint,
                                tolerance: float = SERIES_TOL) -> IdentityReport:
    """
    Compare F2 at the mapped point with the product of two 2F1 values, both by series.

    Raises
    ------
    DomainError
        When β has a non-positive real part, |z1|+|z2| >= 0.95, |Λ1²| >= 1 or |1-Λ2²| >= 1.
    """
    beta1, beta2 = float(beta1), float(beta2)
    p = _f2_params(beta1, beta2)
    lam1, lam2 = mp.Lambda1, mp.Lambda2
    z1, z2, _ = moduli_map_T(lam1, lam2)
    if abs(z1) + abs(z2) >= F2_SERIES_RADIUS:
        raise DomainError(f"Mapped point ({z1:.4g}, {z2:.4g}) lies outside |z1|+|z2| < {F2_SERIES_RADIUS}")
    if abs(lam1 * lam1) >= 1 or abs(1 - lam2 * lam2) >= 1:
        raise DomainError(f"Need |Λ1²| < 1 and |1-Λ2²| < 1, got ({lam1:.4g}, {lam2:.4g})")
    lhs = eval_f2(p, z1, z2, route='series')
    rhs = clausen_product(beta1, beta2, lam1, lam2, lam1 + lam2, route='series')
    report = IdentityReport.compare('multivariate-clausen', lhs, rhs, tolerance,
                                    _moduli_inputs(beta1, beta2, mp, z1=as_json(z1), z2=as_json(z2)))
    logger.info(report.insight)
    return report


def duality_row(n: int, mp: ModuliPoint, beta1: float = 0.25, beta2: float = 0.375,
                tolerance: float = SERIES_TOL) -> tuple[DualityRow, IdentityReport]:
    """
    Evaluate row n of the duality table and check F2(z1, z2) = h^(2α)·(2F1 product).

    The 2F1 product is the same for every row; F2 is taken by series or by the
    double Euler integral depending on where the row sends (Λ1, Λ2).

    Raises
    ------
    ValueError
        For a row number outside 1..4.
    DomainError
        When F2 at the row's point is outside both evaluation routes.
    """
    beta1, beta2 = float(beta1), float(beta2)
    p = _f2_params(beta1, beta2)
    values = duality_row_values(n, mp.Lambda1, mp.Lambda2)
    A, B, z1, z2, h = (complex(values[k]) for k in ('A', 'B', 'z1', 'z2', 'h'))
    relations = max(abs(z1 - 1 / A) / max(1.0, abs(z1)), abs(z2 - (1 - B / A)) / max(1.0, abs(z2)))
    record = DualityRow(row=n, A=as_json(A), B=as_json(B), z1=as_json(z1), z2=as_json(z2), h=as_json(h),
                        relations_hold=relations <= RELATION_TOL)
    lhs = eval_f2(p, z1, z2)
    rhs = clausen_product(beta1, beta2, mp.Lambda1, mp.Lambda2, h)
    report = IdentityReport.compare(f'duality-row-{n}', lhs, rhs, tolerance,
                                    _moduli_inputs(beta1, beta2, mp, row=n, h=as_json(h)))
    report = with_checks(report, {'relation_residual': relations}, RELATION_TOL)
    logger.info(report.insight)
    return record, report


def swapped_moduli(mp: ModuliPoint) -> ModuliPoint:
    """
    (Λ1, Λ2) ↦ (-(1-Λ2)/(1+Λ2), (1+Λ1)/(1-Λ1)), which exchanges z1 and z2.

    Raises
    ------
    DomainError
        When the image lies on the special locus.
    """
    lam1, lam2 = mp.Lambda1, mp.Lambda2
    try:
        return ModuliPoint(Lambda1=-(1 - lam2) / (1 + lam2), Lambda2=(1 + lam1) / (1 - lam1))
    except ValueError as e:
        raise DomainError(f"Swapped moduli of ({lam1}, {lam2}) are not admissible: {e}")


def verify_symmetry_swap(beta1: float, beta2: float, mp: ModuliPoint,
                         tolerance: float = SERIES_TOL) -> IdentityReport:
    """
    Check the identity once more after exchanging the two variables of F2.

    The left side is F2 at the original point; the right side is the product
    formula with (β1, β2) exchanged at the swapped moduli. The auxiliary residuals
    cover the term symmetry of F2, the image of the swapped moduli, the prefactor
    relation (Λ1'+Λ2')·((1+Λ2)/2)·(1-Λ1) = Λ1+Λ2 and the two Kummer quadratic
    identities that carry one product into the other.

    Raises
    ------
    DomainError
        When the swapped moduli violate |Λ1'²| < 1 or |1-Λ2'²| < 1.
    """
    beta1, beta2 = float(beta1), float(beta2)
    p = _f2_params(beta1, beta2)
    lam1, lam2 = mp.Lambda1, mp.Lambda2
    image = swapped_moduli(mp)
    mu1, mu2 = image.Lambda1, image.Lambda2
    if abs(mu1 * mu1) >= 1 or abs(1 - mu2 * mu2) >= 1:
        raise DomainError(f"Swapped moduli ({mu1:.4g}, {mu2:.4g}) need |Λ1'²| < 1 and |1-Λ2'²| < 1")
    z1, z2 = moduli_map(lam1, lam2)
    w1, w2 = moduli_map(mu1, mu2)
    lhs = eval_f2(p, z1, z2)
    rhs = clausen_product(beta2, beta1, mu1, mu2, mu1 + mu2)
    first = kummer_first(beta2, beta1, lam2)
    second = kummer_second(beta2, beta1, lam1)
    checks = {
        'term_symmetry': relative_residual(eval_f2(p.swapped(), z2, z1), lhs),
        'moduli_image': max(abs(w1 - z2), abs(w2 - z1)),
        'prefactor': relative_residual((mu1 + mu2) * (1 + lam2) / 2 * (1 - lam1), lam1 + lam2),
        'kummer_first': relative_residual(*first),
        'kummer_second': relative_residual(*second),
    }
    report = IdentityReport.compare('symmetry-swap', lhs, rhs, tolerance,
                                    _moduli_inputs(beta1, beta2, mp, swapped_Lambda1=as_json(mu1),
                                                   swapped_Lambda2=as_json(mu2)))
    report = with_checks(report, checks, tolerance)
    logger.info(report.insight)
    return report


def clausen_3f2_argument(lam1: complex) -> complex:
    """z1 = -4Λ1²/(1-Λ1²)², the value of z1 on the diagonal Λ2 = Λ1."""
    lam1 = complex(lam1)
    return -4 * lam1 * lam1 / (1 - lam1 * lam1) ** 2


def verify_clausen_3f2(beta1: float, beta2: float, lam1: complex,
                       tolerance: float = SERIES_TOL) -> IdentityReport:
    """
    Check Clausen's square formula and its diagonal form for the same 3F2.

    The 3F2(α, β1, β1-β2+1/2; 2β1, β1+1/2; z1) equals the square of
    2F1(β1/2+β2/2-1/4, β1/2-β2/2+1/4; β1+1/2; z1), and at z1 = -4Λ1²/(1-Λ1²)² it
    also equals (1-Λ1²)^(2α)·2F1(α, β2; β1+1/2; Λ1²)². The report compares the
    3F2 with the second form; the first enters as an auxiliary residual.

    Raises
    ------
    DomainError
        When |z1| > 0.95 or β has a non-positive real part.
    """
    beta1, beta2 = float(beta1), float(beta2)
    _f2_params(beta1, beta2)
    alpha = beta1 + beta2 - 0.5
    lam1 = complex(lam1)
    z = clausen_3f2_argument(lam1)
    series = eval_3f2(alpha, beta1, beta1 - beta2 + 0.5, 2 * beta1, beta1 + 0.5, z)
    square = hyp2f1(beta1 / 2 + beta2 / 2 - 0.25, beta1 / 2 - beta2 / 2 + 0.25, beta1 + 0.5, z) ** 2
    diagonal = cpow(1 - lam1 * lam1, 2 * alpha) * hyp2f1(alpha, beta2, beta1 + 0.5, lam1 * lam1) ** 2
    report = IdentityReport.compare('clausen-3f2', series, diagonal, tolerance,
                                    {'beta1': beta1, 'beta2': beta2, 'Lambda1': as_json(lam1), 'z1': as_json(z)})
    report = with_checks(report, {'clausen_square': relative_residual(series, square)}, tolerance)
    logger.info(report.insight)
    return report


def verify_kummer_quadratic(beta1: float, beta2: float, Lam: complex,
                            tolerance: float = SERIES_TOL) -> IdentityReport:
    """Both quadratic transformations at one Λ; the second enters as an auxiliary residual."""
    beta1, beta2 = float(beta1), float(beta2)
    _f2_params(beta1, beta2)
    lhs1, rhs1 = kummer_first(beta1, beta2, Lam)
    lhs2, rhs2 = kummer_second(beta1, beta2, Lam)
    report = IdentityReport.compare('kummer-quadratic', lhs1, rhs1, tolerance,
                                    {'beta1': beta1, 'beta2': beta2, 'Lambda': as_json(Lam)})
    return with_checks(report, {'second_identity': relative_residual(lhs2, rhs2)}, tolerance)
