from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from misc.config import config
from misc.errors import DivisionByZeroPoly, SingularLocus, TermLimitExceeded, VerificationFailed
from ratfunc.certify import branch_spot_check, certify_equal, ensure_zero, merge_certificates
from ratfunc.poly import MultiPoly, ring
from ratfunc.product import FactorBase, ProductForm, product_ring
from ratfunc.rational import RatFunc, rational_ring

VARS = ('x', 'y')
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def polys(draw):
    """Random polynomials in x and y of degree at most 3 in each variable."""
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), fractions, max_size=5))
    return MultiPoly(VARS, terms)


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(polys(), polys(), fractions, fractions)
def test_evaluation_is_a_ring_homomorphism(a, b, x, y):
    point = {'x': x, 'y': y}
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


@given(polys(), polys())
def test_product_rule(a, b):
    assert (a * b).differentiate('x') == a.differentiate('x') * b + a * b.differentiate('x')


@given(polys(), polys())
def test_exact_quotient_recovers_factor(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_quotient(b) == a


def test_exact_quotient_detects_remainder():
    x, y = ring(*VARS)
    assert (x * x + y).exact_quotient(x + 1) is None


def test_poly_text_and_constructors():
    x, y = ring(*VARS)
    p = 3 * x ** 2 - y + Fraction(1, 2)
    assert p.to_text() == '3*x^2 - y + 1/2'
    assert p.total_degree() == 2
    assert MultiPoly.constant(0, VARS).is_zero()
    with pytest.raises(ValueError):
        MultiPoly.variable('z', VARS)


def test_variables_are_merged_when_rings_differ():
    x = MultiPoly.variable('x', ('x',))
    y = MultiPoly.variable('y', ('y',))
    assert (x + y).variables == ('x', 'y')


def test_compose_substitutes_fractions():
    x, y = ring(*VARS)
    num, den = (x * x + y).compose({'x': (y, y + 1)})
    # y²/(y+1)² + y = (y² + y(y+1)²)/(y+1)²
    assert num == y * y + y * (y + 1) ** 2
    assert den == (y + 1) ** 2


def test_term_limit(monkeypatch):
    monkeypatch.setattr(config, 'term_limit', 10)
    x, y = ring(*VARS)
    with pytest.raises(TermLimitExceeded):
        (1 + x + y) ** 6


def test_ratfunc_arithmetic_and_equality():
    x, y = rational_ring(*VARS)
    f = 1 / (x - 1) - 1 / (x + 1)
    assert f == 2 / (x * x - 1)
    assert f * (x * x - 1) == 2
    assert (x / y) ** -2 == y * y / (x * x)


def test_ratfunc_substitute_and_differentiate():
    x, y = rational_ring(*VARS)
    f = x / (1 - x)
    assert f.substitute({'x': y / (1 + y)}) == y
    assert f.differentiate('x') == 1 / (1 - x) ** 2


def test_ratfunc_evaluate():
    x, y = rational_ring(*VARS)
    f = (x + y) / (x - y)
    assert f.evaluate({'x': Fraction(3), 'y': Fraction(1)}) == 2
    with pytest.raises(SingularLocus):
        f.evaluate({'x': Fraction(1), 'y': Fraction(1)})


def test_ratfunc_zero_denominator():
    x, y = rational_ring(*VARS)
    with pytest.raises(DivisionByZeroPoly):
        x / (y - y)
    with pytest.raises(DivisionByZeroPoly):
        (1 / (x - y)).substitute({'x': y})


def make_base() -> FactorBase:
    return FactorBase(VARS)


def test_factor_base_registers_atoms():
    base = make_base()
    x, y = ring(*VARS)
    base.register(x + y)
    coeff, powers = base.factor(6 * x * (x + y) ** 2)
    assert coeff == 6
    assert sorted(powers.values()) == [1, 2]
    assert len(base.atoms()) == 2


def test_product_form_fractional_powers_combine():
    base = make_base()
    x, y = product_ring(base, *VARS)
    assert (x ** Fraction(1, 2)) * (x ** Fraction(1, 2)) == x
    assert ((x * y) ** Fraction(1, 3)) ** 3 == x * y


def test_product_form_sums_factor_common_part():
    base = make_base()
    x, y = product_ring(base, *VARS)
    total = x * x * y + x * y * y
    assert total.equals(ProductForm.from_poly(base, MultiPoly.variable('x', VARS) * MultiPoly.variable('y', VARS)
                                              * (MultiPoly.variable('x', VARS) + MultiPoly.variable('y', VARS))))


def test_is_one_strict_and_up_to_sign():
    base = make_base()
    x, _ = product_ring(base, *VARS)
    assert (-x / x).is_one()[0]
    assert not (-x / x).is_one(strict=True)[0]
    assert (x / x).is_one(strict=True)[0]


def test_is_one_detects_roots_of_unity():
    base = make_base()
    x, y = product_ring(base, *VARS)
    # (-x)^(1/2) / x^(1/2) is ±i, a fourth root of unity
    ratio = (-x) ** Fraction(1, 2) / x ** Fraction(1, 2)
    verdict, _, _ = ratio.is_one()
    assert verdict
    assert ratio.normalized_power()[1] == 2


def test_is_one_expanded_comparison():
    base = make_base()
    x, y = product_ring(base, *VARS)
    lhs = (x + y) * (x + y)
    rhs = x * x + 2 * x * y + y * y
    assert (lhs / rhs).is_one(strict=True)[0]


def test_product_form_differentiate():
    base = make_base()
    x, y = product_ring(base, *VARS)
    f = x ** Fraction(3, 2) * y
    assert f.differentiate('x') == Fraction(3, 2) * x ** Fraction(1, 2) * y


def test_product_form_evaluate_principal_branch():
    base = make_base()
    x, _ = product_ring(base, *VARS)
    assert abs(((-x) ** Fraction(1, 2)).evaluate({'x': 4.0, 'y': 1.0}) - 2j) < 1e-14


def test_inverse_of_zero():
    base = make_base()
    with pytest.raises(DivisionByZeroPoly):
        ProductForm(base, 0).inverse()


def test_certify_equal_fixes_the_root_of_unity():
    base = make_base()
    x, y = product_ring(base, *VARS)
    lhs = (x * y) ** Fraction(1, 2)
    rhs = x ** Fraction(1, 2) * y ** Fraction(1, 2)
    cert = certify_equal('demo', 'sqrt-split', lhs, rhs, {'x': Fraction(2), 'y': Fraction(3)})
    assert cert.zero
    assert cert.branch_index == 0
    assert cert.passed
    assert ensure_zero(cert) is cert


def test_certify_equal_reports_residual():
    base = make_base()
    x, y = product_ring(base, *VARS)
    cert = certify_equal('demo', 'wrong', (x + y) * (x + y), x * x + y * y, {'x': Fraction(2), 'y': Fraction(3)})
    assert not cert.zero
    assert cert.residuals
    with pytest.raises(VerificationFailed):
        ensure_zero(cert)


def test_rational_sides_are_compared_strictly():
    base = make_base()
    x, _ = product_ring(base, *VARS)
    cert = certify_equal('demo', 'sign', x, -x, {'x': Fraction(2), 'y': Fraction(3)})
    assert not cert.zero


def test_branch_spot_check():
    base = make_base()
    x, _ = product_ring(base, *VARS)
    index, residual = branch_spot_check(-x / x, 2, {'x': Fraction(5), 'y': Fraction(1)})
    assert index == 1
    assert residual < 1e-14


def test_merge_certificates():
    base = make_base()
    x, y = product_ring(base, *VARS)
    point = {'x': Fraction(2), 'y': Fraction(3)}
    good = certify_equal('demo', 'a', x * y, y * x, point)
    bad = certify_equal('demo', 'b', x, y, point)
    merged = merge_certificates('demo', 'both', [good, bad])
    assert not merged.zero
    assert merged.residuals[0].startswith('b: ')


def test_stated_power_rejects_a_sign():
    base = make_base()
    x, _ = product_ring(base, *VARS)
    point = {'x': Fraction(2), 'y': Fraction(3)}
    cert = certify_equal('demo', 'half-power', x ** Fraction(1, 2), (-x) ** Fraction(1, 2), point, power=2)
    assert not cert.zero
    with pytest.raises(VerificationFailed):
        ensure_zero(cert)


def test_stated_power_pins_the_branch():
    base = make_base()
    x, _ = product_ring(base, *VARS)
    point = {'x': Fraction(2), 'y': Fraction(3)}
    root = x ** Fraction(1, 2)
    good = certify_equal('demo', 'root', root, root, point, power=2, expected_index=0)
    assert good.passed and good.branch_order == 2
    flipped = certify_equal('demo', 'root', root, -root, point, power=2, expected_index=0)
    assert flipped.zero and flipped.branch_index == 1
    assert not flipped.passed
    with pytest.raises(VerificationFailed):
        ensure_zero(flipped)
    merged = merge_certificates('demo', 'both', [good, flipped])
    assert not merged.zero
    assert merged.residuals[0].startswith('root: spot check')
