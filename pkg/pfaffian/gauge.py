"""
Gauge transformation between the quadric F2 system and the tensor product of two 2F1 systems.

With F = g·H and g = (Λ1+Λ2)^(2α)·g̃ the two connections are related by
Ω^⊗ = g⁻¹(T*Ω^F2)g - g⁻¹dg, and g⁻¹dg = g̃⁻¹dg̃ + 2α·dlog(Λ1+Λ2)·I.
"""

import logging
from fractions import Fraction
from functools import lru_cache

import numpy as np

from misc.errors import SingularLocus
from models.connections import GaugeEval
from models.reports import Certificate
from numerics.complex_ops import cpow
from pfaffian.connections import HALF, f2_coefficients, omega_f2_at, omega_tensor_at, tensor_coefficients
from ratfunc.poly import MultiPoly
from ratfunc.product import FactorBase, ProductForm
from ratfunc.rational import RatFunc

logger = logging.getLogger(__name__)

LOCUS_TOL = 1e-8
MODULI = ('L1', 'L2')


def moduli_map(lam1, lam2):
    """(z1, z2) = (4Λ1Λ2/(Λ1+Λ2)², -(Λ1²-1)(Λ2²-1)/(Λ1+Λ2)²)."""
    s = lam1 + lam2
    return 4 * lam1 * lam2 / (s * s), -(lam1 * lam1 - 1) * (lam2 * lam2 - 1) / (s * s)


def moduli_jacobian(lam1, lam2) -> list[list]:
    """∂(z1, z2)/∂(Λ1, Λ2); row a holds the derivatives of z_a."""
    s = lam1 + lam2
    s3 = s * s * s
    pp = lam1 * lam2 + 1
    return [
        [4 * lam2 * (lam2 - lam1) / s3, 4 * lam1 * (lam1 - lam2) / s3],
        [-2 * (lam2 * lam2 - 1) * pp / s3, -2 * (lam1 * lam1 - 1) * pp / s3],
    ]


def moduli_map_T(lam1: complex, lam2: complex) -> tuple[complex, complex, np.ndarray]:
    """
    The moduli map (Λ1, Λ2) -> (z1, z2) with its Jacobian.

    Rational arguments (int or Fraction) give exact Fraction results.

    Raises
    ------
    SingularLocus
        When Λ1 + Λ2 = 0.
    """
    exact = all(isinstance(x, (int, Fraction)) for x in (lam1, lam2))
    if not exact:
        lam1, lam2 = complex(lam1), complex(lam2)
    if (lam1 + lam2 == 0) if exact else abs(lam1 + lam2) < LOCUS_TOL:
        raise SingularLocus(f"Moduli map is undefined at Λ1 + Λ2 = 0 ({lam1}, {lam2})")
    if exact:
        lam1, lam2 = Fraction(lam1), Fraction(lam2)
        z1, z2 = moduli_map(lam1, lam2)
        return z1, z2, np.array(moduli_jacobian(lam1, lam2), dtype=object)
    z1, z2 = moduli_map(lam1, lam2)
    return z1, z2, np.array(moduli_jacobian(lam1, lam2), dtype=complex)


def reduced_gauge(b1, b2, lam1, lam2) -> list[list]:
    """The rational matrix g̃ = (Λ1+Λ2)^(-2α)·g."""
    a = b1 + b2 - HALF
    p = lam1 * lam2
    q1, q2 = lam1 * lam1 - 1, lam2 * lam2 - 1
    pm, pp, diff = p - 1, p + 1, lam1 - lam2
    pm3 = pm * pm * pm
    g42 = (lam2 * q1 * q2 * (2 * a * p * p - ((2 * b1 - 1) * lam1 * lam1 + 2 * b1 + 1) * p
                             + (2 * b1 + 1) * lam1 * lam1 - 2 * b2)
           / (2 * pm3 * pp * diff))
    g43 = -(lam1 * q1 * q2 * (2 * a * p * p - ((2 * b1 - 1) * lam2 * lam2 + 2 * b1 + 1) * p
                              + (2 * b1 + 1) * lam2 * lam2 - 2 * b2)
            / (2 * pm3 * pp * diff))
    return [
        [1, 0, 0, 0],
        [-2 * a * p / pm, -lam2 * q1 / (pm * diff), lam1 * q2 / (pm * diff), 0],
        [a * q1 * q2 / (pm * pp), q1 * q2 / (2 * pm * pp), q1 * q2 / (2 * pm * pp), 0],
        [-a * p * q1 * q2 * ((2 * b1 - 1) * p - 2 * b1 - 1) / (pp * pm3), g42, g43,
         -q1 * q2 / (2 * pm * pm)],
    ]


def _check_gauge_point(lam1: complex, lam2: complex) -> None:
    p = lam1 * lam2
    for label, v in (('Λ1', lam1), ('Λ2', lam2), ('Λ1Λ2-1', p - 1), ('Λ1Λ2+1', p + 1),
                     ('Λ1-Λ2', lam1 - lam2), ('Λ1+Λ2', lam1 + lam2),
                     ('Λ1²-1', lam1 * lam1 - 1), ('Λ2²-1', lam2 * lam2 - 1)):
        if abs(v) < LOCUS_TOL:
            raise SingularLocus(f"Gauge matrix is undefined: {label} vanishes at ({lam1}, {lam2})")


def gauge_at(beta1: float, beta2: float, lam1: complex, lam2: complex) -> GaugeEval:
    """
    Evaluate g at (Λ1, Λ2) with (Λ1+Λ2)^(2α) on the principal branch.

    Raises
    ------
    SingularLocus
        On a vanishing denominator or at Λ1 + Λ2 = 0.
    """
    lam1, lam2 = complex(lam1), complex(lam2)
    _check_gauge_point(lam1, lam2)
    alpha = beta1 + beta2 - 0.5
    reduced = np.array([[complex(x) for x in row] for row in reduced_gauge(beta1, beta2, lam1, lam2)])
    s = lam1 + lam2
    prefactor = cpow(s, 2 * alpha)
    dlog = 2 * alpha / s
    return GaugeEval(g=prefactor * reduced, reduced=reduced, dlog_extra=(dlog, dlog))


@lru_cache(maxsize=1)
def _symbolic_gauge() -> tuple[list[list[RatFunc]], list[list[RatFunc]], list[list[RatFunc]]]:
    """g̃ with symbolic β as rational functions in (b1, b2, L1, L2), and its Λ-derivatives."""
    names = ('b1', 'b2') + MODULI
    b1, b2, l1, l2 = (RatFunc.variable(n, names) for n in names)
    entries = [[RatFunc.coerce(x, names) for x in row] for row in reduced_gauge(b1, b2, l1, l2)]
    d1 = [[x.differentiate('L1') for x in row] for row in entries]
    d2 = [[x.differentiate('L2') for x in row] for row in entries]
    logger.debug("symbolic gauge matrix and derivatives prepared")
    return entries, d1, d2


def reduced_gauge_derivatives(beta1: float, beta2: float, lam1: complex, lam2: complex) -> tuple[np.ndarray, np.ndarray]:
    """Exact ∂g̃/∂Λ1 and ∂g̃/∂Λ2 evaluated at a point."""
    _, d1, d2 = _symbolic_gauge()
    values = {'b1': beta1, 'b2': beta2, 'L1': complex(lam1), 'L2': complex(lam2)}
    as_array = lambda m: np.array([[complex(x.evaluate(values)) for x in row] for row in m])
    return as_array(d1), as_array(d2)


def pulled_back_f2(beta1: float, beta2: float, lam1: complex, lam2: complex) -> list[np.ndarray]:
    """Coefficients of dΛ1 and dΛ2 in T*Ω^F2."""
    z1, z2, jac = moduli_map_T(lam1, lam2)
    m1, m2 = omega_f2_at(beta1, beta2, z1, z2).coeff
    return [m1 * jac[0, i] + m2 * jac[1, i] for i in range(2)]


def decomposition_residual(beta1: float, beta2: float, lam1: complex, lam2: complex) -> float:
    """
    Max-norm of Ω^⊗ - (g⁻¹(T*Ω^F2)g - g⁻¹dg) over both coefficient matrices.

    Raises
    ------
    SingularLocus
        When the point is not admissible for the gauge or either connection.
    """
    lam1, lam2 = complex(lam1), complex(lam2)
    gauge = gauge_at(beta1, beta2, lam1, lam2)
    tensor = omega_tensor_at(beta1, beta2, lam1, lam2).coeff
    pulled = pulled_back_f2(beta1, beta2, lam1, lam2)
    derivatives = reduced_gauge_derivatives(beta1, beta2, lam1, lam2)
    g = gauge.reduced
    residual = 0.0
    for i in range(2):
        transformed = np.linalg.solve(g, pulled[i] @ g - derivatives[i]) - gauge.dlog_extra[i] * np.eye(4)
        residual = max(residual, float(np.max(np.abs(tensor[i] - transformed))))
    logger.debug(f"decomposition residual at ({lam1:.4g}, {lam2:.4g}) = {residual:.3e}")
    return residual


def moduli_factor_base() -> FactorBase:
    """Factor base in (L1, L2) seeded with every linear and quadratic atom of the moduli formulas."""
    base = FactorBase(MODULI)
    l1, l2 = (MultiPoly.variable(n, MODULI) for n in MODULI)
    for atom in (l1, l2, l1 + l2, l1 - l2, l1 - 1, l1 + 1, l2 - 1, l2 + 1, l1 * l2 - 1, l1 * l2 + 1):
        base.register(atom)
    return base


def _matmul(a: list[list], b: list[list]) -> list[list]:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), 0) for j in range(n)] for i in range(n)]


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, ProductForm) else x == 0


def decomposition_check_exact(beta1: Fraction, beta2: Fraction,
                              perturb: dict[tuple[int, int], Fraction] | None = None) -> Certificate:
    """
    Verify the gauge relation as an identity of rational functions in (Λ1, Λ2).

    After cancelling (Λ1+Λ2)^(2α) the relation reads
    g̃Ω^⊗_i - (T*Ω^F2)_i g̃ + ∂_i g̃ + 2α(∂_i S/S)g̃ = 0 for i = 1, 2, with S = Λ1+Λ2.

    Parameters
    ----------
    beta1, beta2 : exact rationals
    perturb : optional additive changes to entries of g̃, for negative controls

    Returns
    -------
    Certificate whose residuals list every nonzero entry
    """
    b1, b2 = Fraction(beta1), Fraction(beta2)
    alpha = b1 + b2 - HALF
    base = moduli_factor_base()
    l1, l2 = ProductForm.variable(base, 'L1'), ProductForm.variable(base, 'L2')
    gt = reduced_gauge(b1, b2, l1, l2)
    for (i, j), delta in (perturb or {}).items():
        gt[i][j] = gt[i][j] + delta
    z1, z2 = moduli_map(l1, l2)
    m1, m2 = f2_coefficients(b1, b2, z1, z2)
    jac = moduli_jacobian(l1, l2)
    tensor = tensor_coefficients(b1, b2, l1, l2)
    s = l1 + l2
    residuals = []
    for i, name in enumerate(MODULI):
        pulled = [[m1[r][c] * jac[0][i] + m2[r][c] * jac[1][i] for c in range(4)] for r in range(4)]
        left = _matmul(gt, tensor[i])
        right = _matmul(pulled, gt)
        log_term = 2 * alpha * s.differentiate(name) / s
        for r in range(4):
            for c in range(4):
                entry = gt[r][c]
                d_entry = entry.differentiate(name) if isinstance(entry, ProductForm) else 0
                value = left[r][c] - right[r][c] + d_entry + log_term * entry
                if not _is_zero(value):
                    text = value.to_text() if isinstance(value, ProductForm) else str(value)
                    residuals.append(f"d{name}[{r + 1},{c + 1}]: {text}")
    logger.info(f"decomposition check at β=({b1}, {b2}): {32 - len(residuals)}/32 entries vanish "
                f"({len(base)} factor base atoms)")
    return Certificate(kind='pfaffian', id='decomposition', parameters={'beta1': str(b1), 'beta2': str(b2)},
                       zero=not residuals, residuals=residuals)
