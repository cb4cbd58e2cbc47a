"""
Rational transformations between SE(Λ²)_{r,2r-p,2r-q} and the pencil

    y^(2r) = x^(3r-p-q) (x² + 2(1-2u)x + 1)^p,     u = (1+Λ)²/(4Λ),

and the two-isogeny between SE(λ1)_{r,q,r} and SE(Λ2²)_{r,r,2r-q}.

Every bundle carries y as an exact ProductForm in which the curve coordinate η
stands for the 2r-th root of its curve equation, so the verifier compares y with
the 2r-th root of the target equation and lets ratfunc.certify raise both sides.
"""

import logging
from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field

from misc.errors import ConstraintViolation
from models.curves import CurveSignature
from models.reports import Certificate
from ratfunc.certify import certify_equal, ensure_zero, merge_certificates
from ratfunc.poly import MultiPoly
from ratfunc.product import FactorBase, ProductForm

logger = logging.getLogger(__name__)

Route = Literal['legendre', 'quartic', 'isogeny']
ROUTES: tuple[Route, ...] = ('legendre', 'quartic', 'isogeny')

SPOT_POINT = {'zeta1': Fraction(3, 7), 'zeta2': Fraction(5, 11), 'lam1': Fraction(2, 9), 'L2': Fraction(2, 13)}


def legendre_u(Lam):
    """u = (1+Λ)²/(4Λ), exact for rational Λ."""
    return (1 + Lam) * (1 + Lam) / (4 * Lam)


def quartic_u(lam1):
    return lam1 / (lam1 - 1)


def isogeny_parameter(Lam2):
    """λ1 = ((1+Λ2)/(1-Λ2))²."""
    t = (1 + Lam2) / (1 - Lam2)
    return t * t


def pencil_root(r: int, p: int, q: int, x, u) -> ProductForm:
    """(x^(3r-p-q) (x² + 2(1-2u)x + 1)^p)^(1/2r)."""
    return (x ** (3 * r - p - q) * (x * x + 2 * (1 - 2 * u) * x + 1) ** p) ** Fraction(1, 2 * r)


def _base(*names: str) -> FactorBase:
    base = FactorBase(names)
    for n in names:
        v = MultiPoly.variable(n, names)
        base.register(v)
        base.register(v - 1)
        base.register(v + 1)
    return base


class SWBundle(BaseModel):
    """One transformation: the images x, y and the base parameter, plus the target root."""
    model_config = {"arbitrary_types_allowed": True}

    route: str
    source: str = Field(description="Curve the bundle starts from")
    target: str = Field(description="Curve the bundle lands on")
    x: ProductForm
    y: ProductForm = Field(description="Image of y, with η as the root of the source equation")
    parameter: ProductForm = Field(description="u for the pencil routes, λ1 for the isogeny")
    target_root: ProductForm = Field(description="2r-th root of the target right side at the image")


def _legendre_bundle(sig: CurveSignature) -> SWBundle:
    r, p, q = sig.as_tuple()
    base = _base('zeta2', 'L2')
    zeta2, lam = ProductForm.variable(base, 'zeta2'), ProductForm.variable(base, 'L2')
    eta2 = (zeta2 ** (3 * r - p - q) * (zeta2 - 1) ** p * (zeta2 - lam * lam) ** p) ** Fraction(1, 2 * r)
    x = zeta2 / lam
    y = eta2 / lam ** (Fraction(3, 2) + Fraction(p - q, 2 * r))
    u = legendre_u(lam)
    return SWBundle(route='legendre', source=f'SE(L2^2)_{{{sig.swapped()}}}', target='Legendre pencil',
                    x=x, y=y, parameter=u, target_root=pencil_root(r, p, q, x, u))


def _quartic_bundle(sig: CurveSignature) -> SWBundle:
    r, p, q = sig.as_tuple()
    base = _base('zeta1', 'lam1')
    zeta1, lam1 = ProductForm.variable(base, 'zeta1'), ProductForm.variable(base, 'lam1')
    quad = zeta1 * zeta1 - lam1
    eta1 = (zeta1 ** (r - p + q) * ((zeta1 - 1) * (zeta1 - lam1)) ** (3 * r - p - q)
            * quad ** (2 * (p - r))) ** Fraction(1, 2 * r)
    x = (zeta1 - 1) * (zeta1 - lam1) / (zeta1 * (1 - lam1))
    y = quad * eta1 / (zeta1 * zeta1 * (1 - lam1) ** (Fraction(3, 2) + Fraction(p - q, 2 * r)))
    u = quartic_u(lam1)
    return SWBundle(route='quartic', source='quartic model in (zeta1, lam1)', target='Legendre pencil',
                    x=x, y=y, parameter=u, target_root=pencil_root(r, p, q, x, u))


def _isogeny_bundle(sig: CurveSignature) -> SWBundle:
    """SE(λ1)_{r,m,r} -> SE(Λ2²)_{r,r,2r-m} for a signature (r, m, r)."""
    r, m = sig.r, sig.p
    base = _base('zeta1', 'L2')
    zeta1, lam2 = ProductForm.variable(base, 'zeta1'), ProductForm.variable(base, 'L2')
    lam1 = isogeny_parameter(lam2)
    eta1 = (zeta1 ** m * ((zeta1 - 1) * (zeta1 - lam1)) ** (2 * r - m)) ** Fraction(1, 2 * r)
    zeta2 = -(zeta1 - 1) * (zeta1 - lam1) * (1 - lam2) ** 2 / (4 * zeta1)
    e = 4 - Fraction(m, r)
    sign = ProductForm(base, 1, phase=2 - Fraction(m, 2 * r))
    eta2 = sign * (zeta1 * zeta1 - lam1) * (1 - lam2) ** e * eta1 / (ProductForm(base, 2) ** e * zeta1 * zeta1)
    target = (zeta2 ** (2 * r - m) * ((zeta2 - 1) * (zeta2 - lam2 * lam2)) ** r) ** Fraction(1, 2 * r)
    return SWBundle(route='isogeny', source=f'SE(lam1)_{{{sig}}}', target=f'SE(L2^2)_{{{r},{r},{2 * r - m}}}',
                    x=zeta2, y=eta2, parameter=lam1, target_root=target)


def _require_isogeny(sig: CurveSignature) -> None:
    if sig.q != sig.r:
        raise ConstraintViolation('q=r', f"The isogeny route starts from a signature (r, m, r); got ({sig})")


def swmodel_maps(sig: CurveSignature, routes: tuple[Route, ...] | None = None) -> dict[str, SWBundle]:
    """
    Build the requested transformation bundles.

    Raises
    ------
    ConstraintViolation
        When the isogeny route is requested for a signature with q != r.
    """
    routes = routes or (ROUTES if sig.q == sig.r else ('legendre', 'quartic'))
    builders = {'legendre': _legendre_bundle, 'quartic': _quartic_bundle, 'isogeny': _isogeny_bundle}
    bundles = {}
    for route in routes:
        if route == 'isogeny':
            _require_isogeny(sig)
        bundles[route] = builders[route](sig)
    return bundles


def verify_bundle(sig: CurveSignature, bundle: SWBundle) -> Certificate:
    return certify_equal('swmodel', bundle.route, bundle.y, bundle.target_root, SPOT_POINT,
                         signature=sig.as_tuple(), notes=[f'{bundle.source} -> {bundle.target}'])


def verify_swmodel(sig: CurveSignature, routes: tuple[Route, ...] | None = None) -> Certificate:
    """Exact check of every requested bundle; VerificationFailed on a nonzero residual."""
    parts = [verify_bundle(sig, b) for b in swmodel_maps(sig, routes).values()]
    return ensure_zero(merge_certificates('swmodel', 'transformations', parts, sig.as_tuple()))


def verify_correspondence(sig: CurveSignature) -> Certificate:
    """
    The polynomial correspondence between SE(λ1)_{r,m,r} and SE(Λ2²)_{r,r,2r-m}.

    (-1)^m 4^(m-4r) ζ1^m (ζ1-1)^(2r-m) (ζ1-λ1)^(2r-m) (ζ1²-λ1)^(2r)
        = ζ1^(4r) ζ2^(2r-m) (ζ2-1)^r (ζ2-Λ2²)^r (Λ2-1)^(2m-8r)
    after substituting ζ2 and λ1 in terms of (ζ1, Λ2).
    """
    _require_isogeny(sig)
    r, m = sig.r, sig.p
    base = _base('zeta1', 'L2')
    zeta1, lam2 = ProductForm.variable(base, 'zeta1'), ProductForm.variable(base, 'L2')
    lam1 = isogeny_parameter(lam2)
    zeta2 = -(zeta1 - 1) * (zeta1 - lam1) * (1 - lam2) ** 2 / (4 * zeta1)
    lhs = ((-1) ** m * ProductForm(base, 4) ** (m - 4 * r) * zeta1 ** m
           * ((zeta1 - 1) * (zeta1 - lam1)) ** (2 * r - m) * (zeta1 * zeta1 - lam1) ** (2 * r))
    rhs = (zeta1 ** (4 * r) * zeta2 ** (2 * r - m) * ((zeta2 - 1) * (zeta2 - lam2 * lam2)) ** r
           * (lam2 - 1) ** (2 * m - 8 * r))
    cert = certify_equal('swmodel', 'correspondence', lhs, rhs, SPOT_POINT, signature=sig.as_tuple(),
                         notes=[f'({8 * r - m},{4 * r - m})-correspondence'])
    return ensure_zero(cert)
