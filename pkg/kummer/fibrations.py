"""
Generalized Jacobian fibrations J4 to J8 on S_0^{(r,p,q)}(Λ1², Λ2²).

Each fibration is given by rational functions U, X of (ζ1, ζ2, Λ1, Λ2) and
Y = (rational cofactor)·η1·η2, where η1, η2 are the 2r-th roots of

    η1^(2r) = ζ1^(p+q-r) (ζ1-1)^(2r-p) (ζ1-Λ1²)^(2r-p),
    η2^(2r) = ζ2^(3r-p-q) (ζ2-1)^p (ζ2-Λ2²)^p.

The verifier raises Y and the fiber equation's right side to the 2r-th power and
compares them exactly. The spot check then pins Y to the root of the right side
carrying the sign of the Y cofactor, both radicals taken on the principal branch.
"""

import logging
from fractions import Fraction
from typing import Callable, Literal

from pydantic import BaseModel, Field

from misc.errors import ConstraintViolation
from models.curves import CurveSignature
from models.reports import Certificate
from ratfunc.certify import certify_equal, ensure_zero
from ratfunc.poly import MultiPoly
from ratfunc.product import FactorBase, ProductForm

logger = logging.getLogger(__name__)

FibrationId = Literal['J4a', 'J4b', 'J5', 'J6', 'J7', 'J8']
FIBRATIONS: tuple[FibrationId, ...] = ('J4a', 'J4b', 'J5', 'J6', 'J7', 'J8')
Constraint = Literal['none', 'q=r', 'q=3r-2p']

VARIABLES = ('zeta1', 'zeta2', 'L1', 'L2')
SPOT_POINT = {'zeta1': Fraction(3, 7), 'zeta2': Fraction(5, 11), 'L1': Fraction(2, 13), 'L2': Fraction(3, 17)}


class Ring:
    """The four coordinates as ProductForms over one factor base, with the curve roots."""

    def __init__(self, sig: CurveSignature):
        self.base = fibration_factor_base()
        self.zeta1, self.zeta2, self.L1, self.L2 = (ProductForm.variable(self.base, v) for v in VARIABLES)
        self.l1, self.l2 = self.L1 * self.L1, self.L2 * self.L2
        r, p, q = sig.as_tuple()
        z1, z2 = self.zeta1, self.zeta2
        curve1 = z1 ** (p + q - r) * (z1 - 1) ** (2 * r - p) * (z1 - self.l1) ** (2 * r - p)
        curve2 = z2 ** (3 * r - p - q) * (z2 - 1) ** p * (z2 - self.l2) ** p
        # one radical for η1η2 keeps the constant phases of both curves together
        self.eta12 = (curve1 * curve2) ** Fraction(1, 2 * r)

    def const(self, value) -> ProductForm:
        return ProductForm(self.base, value)


def fibration_factor_base() -> FactorBase:
    """Factor base over (ζ1, ζ2, Λ1, Λ2) seeded with the atoms shared by all fibrations."""
    base = FactorBase(VARIABLES)
    z1, z2, l1, l2 = (MultiPoly.variable(v, VARIABLES) for v in VARIABLES)
    L1, L2 = l1 * l1, l2 * l2
    for atom in (z1, z2, l1, l2, z1 - 1, z2 - 1, l1 - 1, l1 + 1, l2 - 1, l2 + 1,
                 z1 - L1, z2 - L2, z1 - z2, L2 * z1 - z2,
                 z1 + (L1 - 1) * z2 - L1, L2 * z1 + (L1 - 1) * z2 - L1 * L2):
        base.register(atom)
    return base


class FibrationData(BaseModel):
    """U, X and the rational cofactor of η1η2 in Y, plus the fiber equation's factors."""
    model_config = {"arbitrary_types_allowed": True}

    id: str
    signature: tuple[int, int, int]
    U: ProductForm = Field(description="Fibration parameter")
    X: ProductForm
    Y_prefactor: ProductForm = Field(description="Y / (η1 η2)")
    Y: ProductForm
    target: list[tuple[ProductForm, int]] = Field(description="Factors f and exponents e with Y^(2r) = Π f^e")
    target_text: str
    constraint: Constraint = 'none'
    root_index: int = Field(0, description="k with Y = exp(πik/r)·target_root(); r when the Y cofactor is negative")
    notes: list[str] = Field(default_factory=list)

    def target_root(self) -> ProductForm:
        return fiber_root(self.target, self.signature[0])


def _check_constraint(fid: str, sig: CurveSignature, constraint: Constraint) -> None:
    r, p, q = sig.as_tuple()
    if constraint == 'q=r' and q != r:
        raise ConstraintViolation('q=r', f"{fid} needs q = r, got ({sig})")
    if constraint == 'q=3r-2p' and q != 3 * r - 2 * p:
        raise ConstraintViolation('q=3r-2p', f"{fid} needs q = 3r-2p = {3 * r - 2 * p}, got ({sig})")


def _j4a(R: Ring, r, p, q):
    U, X = R.zeta1, R.zeta2
    target = [(U, p + q - r), (U - 1, 2 * r - p), (U - R.l1, 2 * r - p),
              (X, 3 * r - p - q), (X - 1, p), (X - R.l2, p)]
    text = 'U^(p+q-r) (U-1)^(2r-p) (U-L1^2)^(2r-p) X^(3r-p-q) (X-1)^p (X-L2^2)^p'
    return U, X, R.const(1), target, text, []


def _j4b(R: Ring, r, p, q):
    U, X = R.zeta2, R.zeta1
    target = [(U, 3 * r - p - q), (U - 1, p), (U - R.l2, p),
              (X, p + q - r), (X - 1, 2 * r - p), (X - R.l1, 2 * r - p)]
    text = 'U^(3r-p-q) (U-1)^p (U-L2^2)^p X^(p+q-r) (X-1)^(2r-p) (X-L1^2)^(2r-p)'
    return U, X, R.const(1), target, text, []


def _j5(R: Ring, r, p, q):
    z1, z2, l1, l2 = R.zeta1, R.zeta2, R.l1, R.l2
    lin1 = z1 + (l1 - 1) * z2 - l1
    U = (z1 - z2) * (l2 * z1 + (l1 - 1) * z2 - l1 * l2) / ((l2 * z1 - z2) * lin1)
    c = l1 * l2 - l1 - l2
    Rf = l1 * (l2 - 1) * (U - 1) * (U - 1 + l1 * (1 - l2)) * (c * U + l2)
    X = Rf * (z1 - z2) * (z1 - l1) / (z1 * lin1)
    Yp = Rf * l1 * (1 - l1) * (U - 1) * z2 * (z1 - z2) / (z1 * z1 * (l2 * z1 - z2) * lin1 * lin1)
    shift1 = l1 * (l2 - 1) * (U - 1) * ((l1 * l2 - 1) * U - l1 + 1) * (c * U + l2)
    shift2 = l1 * (l2 - 1) * U * (U - 1) * (U - 1 + l1 * (1 - l2)) * ((1 - l1) * l2 * U + l1 - l2)
    target = [(R.L1, -4 * p), (1 - l1, 2 * (r - p)), (1 - l2, -2 * r), (U - 1, 4 * (r - p)),
              (X, 2 * r - p), (X + shift1, p), (X + shift2, p)]
    text = ('L1^(-4p) (1-L1^2)^(2(r-p)) (1-L2^2)^(-2r) (U-1)^(4(r-p)) X^(2r-p) '
            '(X + L1^2(L2^2-1)(U-1)((L1^2L2^2-1)U-L1^2+1)((L1^2L2^2-L1^2-L2^2)U+L2^2))^p '
            '(X + L1^2(L2^2-1)U(U-1)(U-1+L1^2(1-L2^2))((1-L1^2)L2^2U+L1^2-L2^2))^p')
    return U, X, Yp, target, text, []


def j6_fiber(U: ProductForm, X: ProductForm, L1: ProductForm, L2: ProductForm,
             r: int, p: int, q: int) -> list[tuple[ProductForm, int]]:
    """Factors of the J6 fiber equation in (U, X) with L1, L2 standing for Λ1, Λ2."""
    l1, l2 = L1 * L1, L2 * L2
    return [(1 - l1, 2 * (r - p)), (U, -2 * p + q + r), (X, 2 * r - p),
            (X - U * (U - l1) * (l2 * U - 1), p), (X - U * (U - 1) * (l2 * U - l1), p)]


def j7_fiber(U: ProductForm, X: ProductForm, L1: ProductForm, L2: ProductForm,
             r: int, p: int, q: int) -> list[tuple[ProductForm, int]]:
    """Factors of the J7 fiber equation in (U, X)."""
    l1, l2 = L1 * L1, L2 * L2
    quad = X * X - U * (U - 1) * ((l1 * l2 + 1) * U - l1 - l2) * X + l1 * l2 * U * U * (U - 1) ** 4
    return [(L2, 2 * (r - q)), (l2 - 1, 2 * (p - r)), (U, 2 * p - q - r), (U - 1, 2 * (r - q)),
            (X, p + q - r), (quad, 2 * r - p)]


def fiber_root(factors: list[tuple[ProductForm, int]], r: int) -> ProductForm:
    """(Π f^e)^(1/2r)."""
    total = factors[0][0] ** factors[0][1]
    for factor, exponent in factors[1:]:
        total = total * factor ** exponent
    return total ** Fraction(1, 2 * r)


def _j6(R: Ring, r, p, q):
    z1, z2, l1, l2 = R.zeta1, R.zeta2, R.l1, R.l2
    U = z1 / z2
    X = z1 * (z1 - l1) * (z1 - z2) * (l2 * z1 - z2) / (z2 ** 3 * (z1 - 1))
    Yp = (l1 - 1) * z1 * z1 * (z1 - z2) * (l2 * z1 - z2) / (z2 ** 5 * (z1 - 1) ** 2)
    text = ('(1-L1^2)^(2(r-p)) U^(-2p+q+r) X^(2r-p) (X - U(U-L1^2)(L2^2U-1))^p '
            '(X - U(U-1)(L2^2U-L1^2))^p')
    return U, X, Yp, j6_fiber(U, X, R.L1, R.L2, r, p, q), text, []


def _j7(R: Ring, r, p, q):
    z1, z2, l2 = R.zeta1, R.zeta2, R.l2
    U = (z2 - l2) * (z1 - z2) / ((z2 - 1) * (l2 * z1 - z2))
    X = (l2 * (l2 - 1) ** 2 * z1 * z2 * (z1 - 1) ** 2 * (z2 - l2) * (z1 - z2)
         / ((z2 - 1) ** 3 * (l2 * z1 - z2) ** 3))
    Yp = -(l2 * (l2 - 1) ** 3 * (z1 - 1) ** 2 * z2 * (z2 - l2) * (z1 - z2) ** 2
           / ((l2 * z1 - z2) ** 4 * (z2 - 1) ** 5))
    text = ('L2^(2(r-q)) (L2^2-1)^(2(p-r)) U^(2p-q-r) (U-1)^(2(r-q)) X^(p+q-r) '
            '(X^2 - U(U-1)((L1^2L2^2+1)U-L1^2-L2^2)X + L1^2L2^2U^2(U-1)^4)^(2r-p)')
    return U, X, Yp, j7_fiber(U, X, R.L1, R.L2, r, p, q), text, []


def _j8(R: Ring, r, p, q):
    z1, z2, l1, l2 = R.zeta1, R.zeta2, R.l1, R.l2
    U = -(z1 - z2) * (z2 - l2) / (l2 * (l2 - 1) * z1 * (z1 - 1))
    d = (l1 - 1) * (l2 - 1) * U - 1
    X = U * d * (z2 - 1) * (l2 * z1 - z2) / ((l2 - 1) * z2 * (z1 - 1))
    Yp = l2 * U ** 3 * d * (l2 * z1 - z2) / (z2 * z2 * (z1 - 1) * (z2 - l2))
    quad = (X * X - U * ((2 * l1 * l2 - l1 - l2 + 2) * U - 2) * X
            - U * U * (U - 1) * (l1 * l2 * U - 1) * d)
    target = [(R.L2, 4 * (p - r)), (1 - l2, 2 * (p - r)), (U, 4 * (p - r)), (X, p), (quad, 2 * r - p)]
    text = ('L2^(4(p-r)) (1-L2^2)^(2(p-r)) U^(4(p-r)) X^p '
            '(X^2 - U((2L1^2L2^2-L1^2-L2^2+2)U-2)X - U^2(U-1)(L1^2L2^2U-1)((L1^2-1)(L2^2-1)U-1))^(2r-p)')
    return U, X, Yp, target, text, ['Y cofactor reads (L2^2 zeta1 - zeta) with zeta = zeta2',
                                    'constant factor (1-L2^2)^(2(p-r)), not (1-L1^2)^(2(p-r))']


BUILDERS: dict[str, tuple[Callable, Constraint]] = {
    'J4a': (_j4a, 'none'),
    'J4b': (_j4b, 'none'),
    'J5': (_j5, 'q=3r-2p'),
    'J6': (_j6, 'none'),
    'J7': (_j7, 'none'),
    'J8': (_j8, 'q=3r-2p'),
}


def fibration_data(fid: FibrationId, sig: CurveSignature) -> FibrationData:
    """
    Instantiate the U, X, Y formulas of one fibration for a signature.

    Raises
    ------
    ConstraintViolation
        When the signature does not satisfy the fibration's constraint.
    """
    if fid not in BUILDERS:
        raise ValueError(f"Unknown fibration {fid!r}; expected one of {', '.join(FIBRATIONS)}")
    builder, constraint = BUILDERS[fid]
    _check_constraint(fid, sig, constraint)
    R = Ring(sig)
    U, X, Yp, target, text, notes = builder(R, *sig.as_tuple())
    return FibrationData(id=fid, signature=sig.as_tuple(), U=U, X=X, Y_prefactor=Yp,
                         Y=Yp * R.eta12, target=target, target_text=text, constraint=constraint,
                         root_index=0 if Yp.coeff > 0 else sig.r, notes=notes)


def compatible(fid: FibrationId, sig: CurveSignature) -> bool:
    try:
        _check_constraint(fid, sig, BUILDERS[fid][1])
    except ConstraintViolation:
        return False
    return True


def verify_fibration_exact(fid: FibrationId, sig: CurveSignature) -> Certificate:
    """
    Certify Y^(2r) = (fiber equation) after substituting U, X, Y and the two curves.

    Raises
    ------
    ConstraintViolation
        From fibration_data.
    VerificationFailed
        With the leading term of the nonzero residual, or when Y lands on another
        2r-th root of the right side than root_index.
    """
    return certify_fibration(fibration_data(fid, sig))


def certify_fibration(data: FibrationData, root: ProductForm | None = None) -> Certificate:
    """Certify Y against root, by default the 2r-th root of the fiber equation on Y's branch."""
    r = data.signature[0]
    cert = certify_equal('fibration', data.id, data.Y, data.target_root() if root is None else root, SPOT_POINT,
                         signature=data.signature, notes=[data.target_text] + data.notes,
                         power=2 * r, expected_index=data.root_index)
    return ensure_zero(cert)
