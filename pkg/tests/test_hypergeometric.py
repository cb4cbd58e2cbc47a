import mpmath
import pytest
from hypothesis import given, strategies as st

from misc.errors import DomainError, PoleError
from models.params import AppellF2Params, Hyp2F1Params, QuadricParams
from numerics.complex_ops import cpow
from hypergeometric.appell import (eval_f2, eval_f2_unit_z2, euler_admissible, f2_euler_transform,
                                   linear_transform_value)
from hypergeometric.quadratic import kummer_first, kummer_quadratic_pair, kummer_second
from hypergeometric.series import eval_2f1, eval_2f1_many, eval_3f2, hyp2f1, pochhammer
from tests.helpers import close

params = st.floats(min_value=0.05, max_value=1.5)
disk = st.complex_numbers(max_magnitude=0.8, allow_nan=False, allow_infinity=False)


def mp_2f1(a, b, c, z) -> complex:
    return complex(mpmath.hyp2f1(a, b, c, mpmath.mpc(z)))


def test_pochhammer():
    assert pochhammer(0.5, 0) == 1
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6
    with pytest.raises(ValueError):
        pochhammer(1, -1)


@given(params, params, params, disk)
def test_2f1_series_matches_mpmath(a, b, c, z):
    assert close(hyp2f1(a, b, c, z), mp_2f1(a, b, c, z), 1e-10)


@pytest.mark.parametrize('z', [-3.0, -0.99, 0.97, 2.5 + 1j, -1.5 - 4j])
def test_2f1_euler_route_matches_mpmath(z):
    assert close(hyp2f1(0.4, 0.3, 1.1, z), mp_2f1(0.4, 0.3, 1.1, z), 1e-10)


def test_2f1_routes_agree_inside_disk():
    p = Hyp2F1Params(a=0.125, b=0.25, c=0.5)
    assert close(eval_2f1(p, 0.6, route='series'), eval_2f1(p, 0.6, route='euler'), 1e-11)


def test_2f1_vectorized_matches_scalar():
    p = Hyp2F1Params(a=0.5, b=0.25, c=1.25)
    zs = [0.1, -0.5, -2.0, 0.3j]
    many = eval_2f1_many(p, zs)
    assert all(close(v, eval_2f1(p, z), 1e-11) for v, z in zip(many, zs))


def test_2f1_elementary_closed_form():
    # 2F1(1, 1; 2; z) = -log(1 - z)/z
    z = 0.5
    assert close(hyp2f1(1, 1, 2, z), -mpmath.log(1 - z) / z, 1e-13)


def test_2f1_domain_errors():
    with pytest.raises(DomainError):
        eval_2f1(Hyp2F1Params(a=0.5, b=0.5, c=1.5), 2.0)
    with pytest.raises(DomainError):
        eval_2f1(Hyp2F1Params(a=1.5, b=1.5, c=1.2), -3.0)
    with pytest.raises(DomainError):
        eval_2f1(Hyp2F1Params(a=0.5, b=0.5, c=1.5), -3.0, route='series')
    with pytest.raises(ValueError):
        eval_2f1(Hyp2F1Params(a=0.5, b=0.5, c=1.5), 0.1, route='magic')


def test_2f1_rejects_pole_parameter():
    with pytest.raises(PoleError):
        Hyp2F1Params(a=1, b=1, c=-2)


def test_f2_rejects_pole_parameter():
    with pytest.raises(PoleError):
        AppellF2Params(alpha=1, beta1=0.5, beta2=0.5, gamma1=1.5, gamma2=0)


def test_2f1_terminating_series():
    # a = -2 gives the polynomial 1 - 2bz/c + b(b+1)z²/(c(c+1))
    b, c, z = 0.5, 1.5, 0.7
    expected = 1 - 2 * b * z / c + b * (b + 1) * z ** 2 / (c * (c + 1))
    assert close(hyp2f1(-2, b, c, z), expected, 1e-14)


@given(st.floats(min_value=-0.9, max_value=0.9))
def test_3f2_matches_mpmath(z):
    value = eval_3f2(0.25, 0.5, 0.75, 1.25, 1.5, z)
    assert close(value, complex(mpmath.hyp3f2(0.25, 0.5, 0.75, 1.25, 1.5, z)), 1e-11)


def test_3f2_outside_disk():
    with pytest.raises(DomainError):
        eval_3f2(0.25, 0.5, 0.75, 1.25, 1.5, 0.99)


F2 = AppellF2Params(alpha=0.5, beta1=0.3, beta2=0.4, gamma1=0.8, gamma2=1.1)


@pytest.mark.parametrize('z1,z2', [(0.2, 0.3), (-0.4, 0.5), (0.1j, -0.3)])
def test_f2_series_matches_mpmath(z1, z2):
    expected = complex(mpmath.appellf2(0.5, 0.3, 0.4, 0.8, 1.1, mpmath.mpc(z1), mpmath.mpc(z2)))
    assert close(eval_f2(F2, z1, z2), expected, 1e-11)


def test_f2_routes_agree():
    assert close(eval_f2(F2, 0.2, 0.3, route='series'), eval_f2(F2, 0.2, 0.3, route='euler'), 1e-9)


def test_f2_reduces_to_2f1_on_axis():
    assert close(eval_f2(F2, 0.6, 0), hyp2f1(0.5, 0.3, 0.8, 0.6), 1e-13)


def test_f2_symmetry_in_variables():
    assert close(eval_f2(F2, 0.2, 0.5), eval_f2(F2.swapped(), 0.5, 0.2), 1e-13)


def test_f2_euler_outside_series_disk():
    # |z1| + |z2| = 1.1; compare the double integral with the single 2F1 transform
    z1, z2 = 0.6j, 0.5j
    A = 1 / z1
    B = A * (1 - z2)
    expected = cpow(A, F2.alpha) * f2_euler_transform(F2, A, B)
    assert close(eval_f2(F2, z1, z2), expected, 1e-8)


def test_f2_domain():
    assert not euler_admissible(F2, 0.7, 0.7)
    with pytest.raises(DomainError):
        eval_f2(F2, 0.7, 0.7)
    with pytest.raises(DomainError):
        eval_f2(F2, 0.5, 0.6, route='series')


def test_f2_euler_transform_matches_double_series():
    p = QuadricParams(beta1=0.25, beta2=0.375).f2_params()
    A, B = 3.0, 4.0
    expected = cpow(A, -p.alpha) * eval_f2(p, 1 / A, 1 - B / A)
    assert close(f2_euler_transform(p, A, B), expected, 1e-9)


def test_f2_euler_transform_degenerate():
    p = QuadricParams(beta1=0.25, beta2=0.375).f2_params()
    with pytest.raises(DomainError):
        f2_euler_transform(p, 3.0, 3.0)


@pytest.mark.parametrize('which', [1, 2])
def test_f2_linear_transformations(which):
    p = AppellF2Params(alpha=0.3, beta1=0.35, beta2=0.45, gamma1=0.9, gamma2=1.2)
    lhs, rhs = linear_transform_value(which, p, 3.0, 4.0)
    assert close(lhs, rhs, 1e-8)


def test_f2_unit_z2_terminating():
    p = AppellF2Params(alpha=-1, beta1=0.3, beta2=0.4, gamma1=0.8, gamma2=1.1)
    expected = 1 - 0.4 / 1.1 - 0.3 * 0.5 / 0.8
    assert close(eval_f2_unit_z2(p, 0.5), expected, 1e-13)


def test_f2_unit_z2_nonterminating():
    with pytest.raises(DomainError):
        eval_f2_unit_z2(F2, 0.5)


@given(st.sampled_from([(0.25, 0.375), (0.5, 0.5), (1 / 6, 5 / 6), (0.3, 0.45)]),
       st.floats(min_value=0.05, max_value=0.9))
def test_kummer_quadratic_identities(betas, lam):
    l1, r1, l2, r2 = kummer_quadratic_pair(*betas, lam)
    assert close(l1, r1, 1e-9)
    assert close(l2, r2, 1e-9)


def test_kummer_pair_is_concatenation():
    assert kummer_quadratic_pair(0.25, 0.375, 0.5) == kummer_first(0.25, 0.375, 0.5) + kummer_second(0.25, 0.375, 0.5)
