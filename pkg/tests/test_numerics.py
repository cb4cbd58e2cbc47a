import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from misc.errors import DomainError, PoleError, SingularProximity
from models.numbers import PathSpec, QuadratureSpec
from numerics.complex_ops import cpow, relative_residual
from numerics.gamma import beta, gamma, rgamma
from numerics.ode import connection_field, ode_integrate
from numerics.quadrature import integrate_singular
from numerics.theta import modulus_series, squared_theta_quotient, theta2, theta3, theta_coefficients
from tests.helpers import close


@given(st.floats(min_value=-4.5, max_value=12, allow_nan=False),
       st.floats(min_value=-3, max_value=3, allow_nan=False))
def test_gamma_matches_mpmath(x, y):
    z = complex(x, y)
    assume(not (round(x) <= 0 and abs(z - round(x)) < 1e-2))
    expected = complex(mpmath.gamma(mpmath.mpc(x, y)))
    assert close(gamma(z), expected, 1e-11)


def test_gamma_known_values():
    assert close(gamma(5), 24, 1e-14)
    assert close(gamma(0.5), math.sqrt(math.pi), 1e-14)
    assert close(gamma(-0.5), -2 * math.sqrt(math.pi), 1e-14)


def test_gamma_pole_raises_and_rgamma_vanishes():
    with pytest.raises(PoleError):
        gamma(-2)
    assert rgamma(-2) == 0
    assert rgamma(0) == 0


def test_beta_function():
    assert close(beta(0.5, 0.5), math.pi, 1e-13)


def test_cpow_principal_branch():
    assert close(cpow(-1, 0.5), 1j, 1e-15)
    assert close(cpow(4, 0.5), 2, 1e-15)
    assert cpow(0, 2) == 0
    with pytest.raises(DomainError):
        cpow(0, -1)


def test_relative_residual_falls_back_to_absolute():
    assert relative_residual(1e-3, 0) == 1e-3
    assert relative_residual(2.0, 1.0) == 1.0


def test_quadrature_arcsine_weight():
    # ∫ s^(-1/2) (1-s)^(-1/2) ds over [0, 1] is π
    value = integrate_singular(lambda x: np.ones_like(x), 0, 1, -0.5, -0.5)
    assert abs(value - math.pi) < 1e-11


@given(st.floats(min_value=-0.8, max_value=1.5), st.floats(min_value=-0.8, max_value=1.5))
def test_quadrature_beta_integrals(ea, eb):
    value = integrate_singular(lambda x: np.ones_like(x), 0, 1, ea, eb)
    expected = float(mpmath.beta(ea + 1, eb + 1))
    assert close(value, expected, 1e-9)


def test_quadrature_scaled_segment_and_smooth_factor():
    # (b - a)·∫ exp(x) ds over a segment with no endpoint weight
    value = integrate_singular(np.exp, 1, 3)
    assert close(value, math.exp(3) - math.exp(1), 1e-12)


def test_quadrature_vector_valued():
    value = integrate_singular(lambda x: np.stack([x, x ** 2], axis=1), 0, 1)
    assert np.allclose(value, [0.5, 1 / 3], atol=1e-12)


def test_quadrature_rejects_nonintegrable_exponent():
    with pytest.raises(ValueError):
        integrate_singular(lambda x: np.ones_like(x), 0, 1, -1.0, 0.0)


def test_quadrature_spec_bounds():
    with pytest.raises(ValueError):
        QuadratureSpec(max_level=20)


def test_ode_exponential_growth():
    rhs = lambda point, direction: np.array([[direction[0]]])
    y = ode_integrate(rhs, PathSpec.segment(0, 1), [1.0])
    assert close(y[0], math.e, 1e-9)


def test_ode_connection_field_along_two_segments():
    # dy = (dz1 + 2 dz2)·y gives y = exp(z1 + 2 z2)
    field = connection_field(lambda p: [np.array([[1.0]]), np.array([[2.0]])])
    path = PathSpec(waypoints=[(0, 0), (0.5, 0), (0.5, 0.25)])
    y = ode_integrate(field, path, [1.0])
    assert close(y[0], math.exp(1.0), 1e-9)


def test_ode_clearance_violation():
    rhs = lambda point, direction: np.array([[direction[0] / point[0]]])
    with pytest.raises(SingularProximity):
        ode_integrate(rhs, PathSpec.segment(-1, 1, clearance=1e-2), [1.0], distance=lambda p: abs(p[0]))


def test_path_spec_rejects_repeated_waypoints():
    with pytest.raises(ValueError):
        PathSpec(waypoints=[(0.1,), (0.1,)])


@given(st.floats(min_value=0.01, max_value=0.85))
def test_theta_constants_match_mpmath(q):
    assert close(theta2(q), complex(mpmath.jtheta(2, 0, q)), 1e-13)
    assert close(theta3(q), complex(mpmath.jtheta(3, 0, q)), 1e-13)


def test_theta3_complex_nome():
    q = 0.3 + 0.2j
    assert close(theta3(q), complex(mpmath.jtheta(3, 0, mpmath.mpc(0.3, 0.2))), 1e-13)


def test_theta_nome_limit():
    with pytest.raises(DomainError):
        theta3(0.95)


def test_theta_coefficients():
    assert list(theta_coefficients(3, 9)) == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]
    assert list(theta_coefficients(2, 6)) == [1, 0, 1, 0, 0, 0, 1]
    with pytest.raises(ValueError):
        theta_coefficients(4, 3)


def test_modulus_series_leading_terms():
    assert np.allclose(modulus_series(4), [1, -4, 14, -40, 101])


def test_squared_theta_quotient_at_square_lattice():
    # τ = i is the lemniscatic point where the modulus is 1/√2
    assert close(squared_theta_quotient(1j), 1 / math.sqrt(2), 1e-13)


def test_squared_theta_quotient_small_nome_expansion():
    tau = 3j
    q = cmath.exp(1j * math.pi * tau)
    series = 4 * cmath.sqrt(q) * sum(c * q ** n for n, c in enumerate(modulus_series(6)))
    assert close(squared_theta_quotient(tau), series, 1e-12)


def test_squared_theta_quotient_domain():
    with pytest.raises(DomainError):
        squared_theta_quotient(-1j)
    with pytest.raises(DomainError):
        squared_theta_quotient(0.01j)
