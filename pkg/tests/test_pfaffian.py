from fractions import Fraction

import numpy as np
import pytest

from misc.errors import DomainError, SingularLocus, SingularProximity
from models.numbers import PathSpec
from pfaffian.connections import curl_residual, f2_coefficients, omega_2f1_at, omega_f2_at, omega_tensor_at
from pfaffian.gauge import (decomposition_check_exact, decomposition_residual, gauge_at, moduli_map_T,
                            pulled_back_f2)
from pfaffian.transport import (f2_solution_vector, hyp2f1_solution_vector, transport_2f1, transport_f2,
                                transport_tensor)
from hypergeometric.series import hyp2f1

BETAS = (0.25, 0.375)


def f2_matrices(z1, z2):
    return tuple(np.array(m, dtype=complex) for m in f2_coefficients(*BETAS, z1, z2))


@pytest.mark.parametrize('point', [(0.2, 0.3), (-0.4, 0.25 + 0.1j), (2.5, -0.8)])
def test_f2_connection_is_integrable(point):
    assert curl_residual(f2_matrices, point) < 1e-6


def test_f2_connection_singular_lines():
    with pytest.raises(SingularLocus):
        omega_f2_at(*BETAS, 0.4, 0.6)
    with pytest.raises(SingularLocus):
        omega_f2_at(*BETAS, 0.0, 0.3)


def test_2f1_connection_shape_and_singularities():
    form = omega_2f1_at(*BETAS, 0.5)
    assert form.dim == 2 and form.coords == ('L',)
    with pytest.raises(SingularLocus):
        omega_2f1_at(*BETAS, -1.0)


def test_tensor_connection_blocks():
    form = omega_tensor_at(*BETAS, 0.3, 0.6)
    first = omega_2f1_at(*BETAS, 0.3).coeff[0]
    assert np.allclose(form.coeff[0], np.kron(np.eye(2), first))


def test_solution_vector_first_entry_is_f2():
    vec = hyp2f1_solution_vector(*BETAS, 0.5)
    alpha = BETAS[0] + BETAS[1] - 0.5
    assert abs(vec[0] - hyp2f1(alpha, BETAS[1], BETAS[0] + 0.5, 0.25)) < 1e-13


def test_solution_vector_radius():
    with pytest.raises(DomainError):
        f2_solution_vector(*BETAS, 0.4, 0.4)
    with pytest.raises(DomainError):
        hyp2f1_solution_vector(*BETAS, 0.9)


def test_transport_f2_matches_series():
    start, end = (0.1, 0.1), (0.2, 0.3)
    y0 = f2_solution_vector(*BETAS, *start)
    y = transport_f2(*BETAS, PathSpec.segment(start, end), y0)
    assert np.allclose(y, f2_solution_vector(*BETAS, *end), rtol=1e-8, atol=1e-10)


def test_transport_2f1_matches_series():
    y = transport_2f1(*BETAS, PathSpec.segment(0.2, 0.7), hyp2f1_solution_vector(*BETAS, 0.2))
    assert np.allclose(y, hyp2f1_solution_vector(*BETAS, 0.7), rtol=1e-8, atol=1e-10)


def test_transport_tensor_matches_product_of_series():
    def vector(l1, l2):
        return np.kron(hyp2f1_solution_vector(*BETAS, l2), hyp2f1_solution_vector(*BETAS, l1))

    path = PathSpec(waypoints=[(0.3, 0.4), (0.5, 0.4), (0.5, 0.6)])
    y = transport_tensor(*BETAS, path, vector(0.3, 0.4))
    assert np.allclose(y, vector(0.5, 0.6), rtol=1e-8, atol=1e-10)


def test_transport_refuses_paths_through_singular_lines():
    with pytest.raises(SingularProximity):
        transport_f2(*BETAS, PathSpec.segment((0.1, 0.1), (0.3, 0.9)), f2_solution_vector(*BETAS, 0.1, 0.1))


def test_moduli_map_exact_values():
    z1, z2, jac = moduli_map_T(Fraction(1, 2), Fraction(1, 3))
    assert z1 == Fraction(24, 25)
    assert z2 == Fraction(-24, 25)
    assert jac.shape == (2, 2)
    with pytest.raises(SingularLocus):
        moduli_map_T(Fraction(1, 2), Fraction(-1, 2))


def test_pulled_back_connection_has_two_coefficients():
    pulled = pulled_back_f2(*BETAS, 0.3, 0.6)
    assert len(pulled) == 2 and pulled[0].shape == (4, 4)


def test_gauge_singular_on_diagonal():
    with pytest.raises(SingularLocus):
        gauge_at(*BETAS, 0.5, 0.5)


@pytest.mark.parametrize('betas,point', [
    ((0.25, 0.375), (0.3, 0.6)),
    ((0.3, 0.6), (0.2, 0.7)),
    ((0.15, 0.8), (0.35 + 0.1j, 0.75)),
])
def test_decomposition_holds_numerically(betas, point):
    assert decomposition_residual(*betas, *point) < 1e-8


def test_decomposition_exact_certificate():
    cert = decomposition_check_exact(Fraction(1, 2), Fraction(1, 2))
    assert cert.zero, cert.residuals
    assert cert.parameters == {'beta1': '1/2', 'beta2': '1/2'}


def test_decomposition_exact_detects_perturbation():
    cert = decomposition_check_exact(Fraction(1, 2), Fraction(1, 2), perturb={(0, 0): Fraction(1, 7)})
    assert not cert.zero
    assert cert.residuals
