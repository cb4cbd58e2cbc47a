"""
Rational maps between the fibrations of S_0 and the twisted pencils over P¹_u.

The twisted Legendre family (variables x, u with moduli A, B) is

    y^(2r) = (u-A)^(2r-q) (u-B)^(2r-q) x^(2r-p) (x-1)^(2r-p) (x-u)^(p+q-r),

and the twisted fiber carried by J7 is

    y^(2r) = (u-A)^(2r-p) (u-B)^(2r-p) x^(3r-p-q) (x² + 2(1-2u)x + 1)^p.

Every verifier substitutes the printed map into the target equation and certifies
the result exactly, the same way kummer.fibrations does.
"""

import logging
from fractions import Fraction

from misc.errors import ConstraintViolation
from models.curves import CurveSignature
from models.reports import Certificate
from kummer.fibrations import fiber_root, j6_fiber, j7_fiber
from kummer.moduli import DUALITY_SUBSTITUTIONS, ab_from_lambdas, ab_j6_from_lambdas, duality_row_values
from pfaffian.gauge import moduli_factor_base
from ratfunc.certify import certify_equal, ensure_zero, merge_certificates
from ratfunc.poly import MultiPoly
from ratfunc.product import FactorBase, ProductForm, product_ring
from ratfunc.rational import RatFunc, rational_ring, ratfunc_equal

logger = logging.getLogger(__name__)

MODULI_POINT = {'L1': Fraction(2, 13), 'L2': Fraction(3, 17)}
FIBER_POINT = {'U': Fraction(3, 7), 'X': Fraction(5, 11), **MODULI_POINT}
PENCIL_POINT = {'x': Fraction(3, 7), 'u': Fraction(5, 11), 'A': Fraction(7, 5), 'B': Fraction(11, 4)}
TILDE_POINT = {'ut': Fraction(3, 7), 'xt': Fraction(5, 11), 'At': Fraction(2, 9), 'Bt': Fraction(7, 13)}
COVER_POINT = {'z': Fraction(3, 7), 'a': Fraction(2, 9), 'b': Fraction(5, 13), 'Xt': Fraction(7, 11)}


def _base(names: tuple[str, ...], *extra: MultiPoly) -> FactorBase:
    base = FactorBase(names)
    for n in names:
        v = MultiPoly.variable(n, names)
        for atom in (v, v - 1, v + 1):
            base.register(atom)
    for atom in extra:
        base.register(atom)
    return base


def _require_q_equals_r(sig: CurveSignature, what: str) -> None:
    if sig.q != sig.r:
        raise ConstraintViolation('q=r', f"{what} needs q = r, got ({sig})")


def legendre_family(u, x, A, B, r: int, p: int, q: int, perturb: int = 0) -> list[tuple[ProductForm, int]]:
    """Factors of the twisted Legendre family; perturb shifts the exponent of x."""
    return [(u - A, 2 * r - q), (u - B, 2 * r - q), (x, 2 * r - p + perturb),
            (x - 1, 2 * r - p), (x - u, p + q - r)]


def twisted_fiber(u, x, A, B, r: int, p: int, q: int) -> list[tuple[ProductForm, int]]:
    """Factors of the twisted fiber with the quadratic x² + 2(1-2u)x + 1."""
    return [(u - A, 2 * r - p), (u - B, 2 * r - p), (x, 3 * r - p - q),
            (x * x + 2 * (1 - 2 * u) * x + 1, p)]


def tilde_family(ut, xt, At, Bt, r: int, p: int, q: int) -> list[tuple[ProductForm, int]]:
    """The Legendre family after u ↦ 1/(1-ũ), x ↦ 1/(1-x̃)."""
    return [(ut - 1, -p + q + r), (ut - At, 2 * r - q), (ut - Bt, 2 * r - q),
            (xt, 2 * r - p), (xt - 1, p - q + r), (xt - ut, p + q - r)]


# -- J7 and the twisted fiber ------------------------------------------------

def verify_j7_twist_link(sig: CurveSignature) -> Certificate:
    """
    The twisted fiber with A, B from moduli_AB pulls back to the J7 fiber of the
    swapped signature, and du∧dx/y = two_form_scale · dU∧dX/Y up to a root of unity.
    """
    r, p, q = sig.as_tuple()
    base = moduli_factor_base_with('U', 'X')
    U, X, L1, L2 = product_ring(base, 'U', 'X', 'L1', 'L2')
    A, B = ab_from_lambdas(L1, L2)
    P = L1 * L2
    Y = fiber_root(j7_fiber(U, X, L1, L2, *sig.swapped().as_tuple()), r)
    u = B + (B - A) / (U - 1)
    x = X / (P * U * (U - 1) ** 2)
    e = Fraction(p, r)
    y = (-(A - B) ** (2 - e) * L2 ** (1 - Fraction(q, r)) * Y
         / (P ** (Fraction(3, 2) + Fraction(p - q, 2 * r)) * (1 - L2 * L2) ** (1 - e) * U * (U - 1) ** 4))
    pullback = certify_equal('link', 'j7_twist', y, fiber_root(twisted_fiber(u, x, A, B, r, p, q), r),
                             FIBER_POINT, signature=sig.as_tuple())

    jacobian = u.differentiate('U') * x.differentiate('X') * Y / y
    scale = (ProductForm(base, 2) ** (2 - 2 * e) * L1 ** (Fraction(3, 2) - Fraction(p + q, 2 * r))
             * L2 ** (Fraction(1, 2) - Fraction(p - q, 2 * r)) / (L1 * L1 - 1) ** (1 - e))
    two_form = certify_equal('link', 'j7_twist_two_form', jacobian, scale, FIBER_POINT,
                             signature=sig.as_tuple())
    return ensure_zero(merge_certificates('link', 'j7_twist', [pullback, two_form], sig.as_tuple()))


def moduli_factor_base_with(*names: str) -> FactorBase:
    """The moduli factor base extended by fiber coordinates."""
    moduli = moduli_factor_base()
    variables = names + moduli.variables
    base = FactorBase(variables)
    for n in names:
        v = MultiPoly.variable(n, variables)
        base.register(v)
        base.register(v - 1)
    for atom in moduli.atoms():
        base.register(atom)
    return base


# -- J6 and the twisted Legendre pencil --------------------------------------

def _legendre_to_tilde(sig: CurveSignature) -> Certificate:
    r, p, q = sig.as_tuple()
    names = ('ut', 'xt', 'At', 'Bt')
    ut, xt, At, Bt = (MultiPoly.variable(n, names) for n in names)
    base = _base(names, ut - At, ut - Bt, xt - ut)
    ut, xt, At, Bt = product_ring(base, *names)
    yt = fiber_root(tilde_family(ut, xt, At, Bt, r, p, q), r)
    u, x = 1 / (1 - ut), 1 / (1 - xt)
    A, B = 1 / (1 - At), 1 / (1 - Bt)
    y = yt / ((1 - xt) ** 2 * (1 - ut) ** 2 * ((1 - At) * (1 - Bt)) ** (1 - Fraction(q, 2 * r)))
    return certify_equal('link', 'legendre_tilde', y, fiber_root(legendre_family(u, x, A, B, r, p, q), r),
                         TILDE_POINT, signature=sig.as_tuple())


def _tilde_to_j6(sig: CurveSignature) -> Certificate:
    r, p, q = sig.as_tuple()
    base = moduli_factor_base_with('U', 'X')
    U, X, L1, L2 = product_ring(base, 'U', 'X', 'L1', 'L2')
    alpha, beta = L1, 1 / L2
    a2, b2 = alpha * alpha, beta * beta
    ab = alpha * beta
    At = (ab + 1) ** 2 / (alpha + beta) ** 2
    Bt = (ab - 1) ** 2 / (alpha - beta) ** 2
    D = (U - a2) * (U - b2)
    ut = (U - 1) * (U - a2 * b2) / D
    xt = b2 * X / (U * D)
    Y = fiber_root(j6_fiber(U, X, L1, L2, r, p, q), r)
    e, f = Fraction(p, 2 * r), Fraction(q, 2 * r)
    yt = (beta ** (3 + 2 * e - 2 * f) * (a2 - 1) ** (Fraction(3, 2) + e - f) * (1 - b2) ** (Fraction(5, 2) - e - f)
          * (U * U - a2 * b2) * Y / (U * (U - a2) ** 3 * (U - b2) ** 3 * (a2 - b2) ** (2 - 2 * f)))
    pullback = certify_equal('link', 'tilde_j6', yt, fiber_root(tilde_family(ut, xt, At, Bt, r, p, q), r),
                             FIBER_POINT, signature=sig.as_tuple(), notes=['(alpha, beta) = (L1, 1/L2)'])
    A, B = ab_j6_from_lambdas(L1, L2)
    moduli = [certify_equal('link', f'moduli_j6_{name}', lhs, 1 / (1 - rhs), MODULI_POINT)
              for name, lhs, rhs in (('A', A, At), ('B', B, Bt))]
    return merge_certificates('link', 'tilde_j6', [pullback] + moduli, sig.as_tuple())


def base_change_ramification() -> dict[str, bool]:
    """Branch points U = ∓αβ of ũ(U) and their values Ã, B̃ as exact rational identities."""
    U, a, b = rational_ring('U', 'a', 'b')
    ut = (U - 1) * (U - a * a * b * b) / ((U - a * a) * (U - b * b))
    dut = ut.differentiate('U')
    At = (a * b + 1) ** 2 / (a + b) ** 2
    Bt = (a * b - 1) ** 2 / (a - b) ** 2
    return {
        'u(-ab) = A': ratfunc_equal(ut.substitute({'U': -a * b}), At),
        'u(ab) = B': ratfunc_equal(ut.substitute({'U': a * b}), Bt),
        "u'(-ab) = 0": dut.substitute({'U': -a * b}).is_zero(),
        "u'(ab) = 0": dut.substitute({'U': a * b}).is_zero(),
    }


def _checks_certificate(name: str, checks: dict[str, bool], sig: tuple[int, int, int] | None) -> Certificate:
    failed = [k for k, ok in checks.items() if not ok]
    return Certificate(kind='link', id=name, signature=sig, zero=not failed, method='expanded',
                       residuals=[f'{k} does not hold' for k in failed], notes=list(checks))


def verify_base_change_j6(sig: CurveSignature) -> Certificate:
    """
    The degree-two base change carries the twisted Legendre pencil with moduli
    moduli_AB_j6 onto the J6 fiber.

    Raises
    ------
    ConstraintViolation
        Unless q = r.
    VerificationFailed
        When any part leaves a nonzero residual.
    """
    _require_q_equals_r(sig, 'The J6 base change')
    parts = [_legendre_to_tilde(sig), _tilde_to_j6(sig),
             _checks_certificate('ramification', base_change_ramification(), sig.as_tuple())]
    return ensure_zero(merge_certificates('link', 'base_change_j6', parts, sig.as_tuple()))


# -- J7 double cover ---------------------------------------------------------

def verify_double_cover(sig: CurveSignature) -> Certificate:
    """
    Pull-back of the twisted fiber along u = (1+z)²/(4z), x = X̃/z, y = Ỹ/(16z³),
    with A = (1+a)²/(4a), B = (1+b)²/(4b), and the two-form factor 4(z²-1).
    """
    r, p, q = sig.as_tuple()
    names = ('z', 'a', 'b', 'Xt')
    z, a, b, Xt = (MultiPoly.variable(n, names) for n in names)
    base = _base(names, z - a, z - b, a * z - 1, b * z - 1, Xt - z * z)
    z, a, b, Xt = product_ring(base, *names)
    quartic = (z - a) * (z - 1 / a) * (z - b) * (z - 1 / b)
    Yt = (z ** (p + q - r) * quartic ** (2 * r - p) * ProductForm(base, 2) ** (4 * p)
          * Xt ** (3 * r - p - q) * (Xt - 1) ** p * (Xt - z * z) ** p) ** Fraction(1, 2 * r)
    u = (1 + z) ** 2 / (4 * z)
    A, B = (1 + a) ** 2 / (4 * a), (1 + b) ** 2 / (4 * b)
    x, y = Xt / z, Yt / (16 * z ** 3)
    pullback = certify_equal('link', 'double_cover', y, fiber_root(twisted_fiber(u, x, A, B, r, p, q), r),
                             COVER_POINT, signature=sig.as_tuple())
    factor = u.differentiate('z') * x.differentiate('Xt') * Yt / y
    two_form = certify_equal('link', 'double_cover_two_form', factor, 4 * (z * z - 1), COVER_POINT,
                             signature=sig.as_tuple())
    u_rational = (1 + RatFunc.variable('z', ('z',))) ** 2 / (4 * RatFunc.variable('z', ('z',)))
    ramified = _checks_certificate('double_cover_ramification',
                                   {'u(1) = 1': u_rational.substitute({'z': 1}) == 1}, sig.as_tuple())
    return ensure_zero(merge_certificates('link', 'double_cover', [pullback, two_form, ramified],
                                          sig.as_tuple()))


# -- twisted Legendre links --------------------------------------------------

def _pencil_ring(*extra) -> tuple[FactorBase, tuple[ProductForm, ...]]:
    names = ('x', 'u', 'A', 'B')
    x, u, A, B = (MultiPoly.variable(n, names) for n in names)
    base = _base(names, x - u, u - A, u - B, A - B, x * x + 2 * x - 4 * u * x + 1)
    return base, product_ring(base, *names)


def legendre_link_a(sig: CurveSignature, perturb: int = 0) -> Certificate:
    """
    The residual family in (X1, X2) with z1 = 1/A, z2 = 1-B/A, X1 = x, X2 = (u-A)/(B-A)
    and i·y = X3·A^(-(1/2-p/2r-q/2r))·(A-B)^(2-q/r) is the twisted Legendre family.
    """
    r, p, q = sig.as_tuple()
    base, (x, u, A, B) = _pencil_ring()
    z1, z2 = 1 / A, 1 - B / A
    X1, X2 = x, (u - A) / (B - A)
    X3 = (X1 ** (2 * r - p) * (1 - X1) ** (2 * r - p) * X2 ** (2 * r - q) * (1 - X2) ** (2 * r - q)
          * (1 - z1 * X1 - z2 * X2) ** (p + q - r)) ** Fraction(1, 2 * r)
    minus_i = ProductForm(base, 1, phase=Fraction(-1, 2))
    y = minus_i * X3 * A ** -(Fraction(1, 2) - Fraction(p + q, 2 * r)) * (A - B) ** (2 - Fraction(q, r))
    target = fiber_root(legendre_family(u, x, A, B, r, p, q, perturb), r)
    return certify_equal('link', 'legendre_a', y, target, PENCIL_POINT, signature=sig.as_tuple(),
                         parameters={'perturb': str(perturb)} if perturb else None)


def legendre_link_b(sig: CurveSignature, perturb: int = 0) -> Certificate:
    """
    x ↦ (x+1)²/(4x) with the matching y carries the twisted fiber to the twisted
    Legendre family whose roles of p and q are exchanged.
    """
    r, p, q = sig.as_tuple()
    base, (x, u, A, B) = _pencil_ring()
    D = x * x + 2 * (1 - 2 * u) * x + 1
    y = fiber_root(twisted_fiber(u, x, A, B, r, p, q), r)
    xb = (x + 1) ** 2 / (4 * x)
    yb = ((x * x - 1) ** (2 - Fraction(q, r)) * D ** (Fraction(q, 2 * r) - Fraction(1, 2)) * y
          / (ProductForm(base, 2) ** (3 + Fraction(p - q, r)) * x ** (3 - Fraction(q, r))))
    target = fiber_root(legendre_family(u, xb, A, B, r, q, p, perturb), r)
    return certify_equal('link', 'legendre_b', yb, target, PENCIL_POINT, signature=sig.as_tuple(),
                         parameters={'perturb': str(perturb)} if perturb else None)


def verify_legendre_links(sig: CurveSignature, perturb: int = 0) -> Certificate:
    """
    Both identifications between the twisted Legendre families and the twisted fiber.

    perturb shifts one exponent of the target by an integer; any nonzero value is a
    negative control and must end in VerificationFailed.

    Raises
    ------
    ConstraintViolation
        Unless q = r, where the maps are rational.
    VerificationFailed
    """
    _require_q_equals_r(sig, 'The Legendre links')
    parts = [legendre_link_a(sig, perturb), legendre_link_b(sig, perturb)]
    return ensure_zero(merge_certificates('link', 'legendre', parts, sig.as_tuple()))


# -- duality table -----------------------------------------------------------

def duality_rows_exact() -> Certificate:
    """
    Every row satisfies (z1, z2) = (1/A, 1-B/A), and rows 2 to 4 equal row 1 after
    the Λ1 substitution of the row, all in exact rational arithmetic over (Λ1, Λ2).
    """
    base = moduli_factor_base()
    L1, L2 = product_ring(base, 'L1', 'L2')
    row1 = {}
    parts = []
    for n in (1, 2, 3, 4):
        row = duality_row_values(n, L1, L2)
        parts.append(certify_equal('duality', f'row{n}_z1', row['z1'], 1 / row['A'], MODULI_POINT))
        parts.append(certify_equal('duality', f'row{n}_z2', row['z2'], 1 - row['B'] / row['A'], MODULI_POINT))
        if n == 1:
            row1 = row
            continue
        moved = duality_row_values(1, DUALITY_SUBSTITUTIONS[n](L1), L2)
        for key in ('A', 'B', 'z1', 'z2'):
            parts.append(certify_equal('duality', f'row{n}_{key}', row[key], moved[key], MODULI_POINT))
    logger.debug(f"row 1 entries: {', '.join(f'{k}={v.to_text()}' for k, v in row1.items())}")
    return ensure_zero(merge_certificates('duality', 'table', parts))
