from fractions import Fraction

import pytest

from misc.errors import ConstraintViolation, SingularLocus, VerificationFailed
from models.curves import CurveSignature
from models.surfaces import ModuliPoint
from kummer.fibrations import (FIBRATIONS, SPOT_POINT, certify_fibration, compatible, fibration_data,
                               verify_fibration_exact)
from ratfunc.product import ProductForm
from kummer.invariants import hodge_diamond, surface_invariants
from kummer.links import (base_change_ramification, duality_rows_exact, verify_base_change_j6,
                          verify_double_cover, verify_j7_twist_link, verify_legendre_links)
from kummer.moduli import duality_row_values, moduli_AB, moduli_AB_j6, scale_consistency
from kummer.periods import kummer_period, quadratic_relation_residual
from tests.helpers import close

LEGENDRE = CurveSignature(r=1, p=1, q=1)
QUARTIC = CurveSignature(r=2, p=1, q=2)
RANK_FOUR = CurveSignature(r=4, p=3, q=6)


def as_tuple(inv):
    return inv.K2, inv.euler, inv.chi, inv.tau, inv.irregularity, inv.pg, inv.h11


@pytest.mark.parametrize('r,expected', [
    (1, (0, 24, 2, -16, 0, 1, 20)),
    (2, (16, 32, 4, -16, 4, 7, 26)),
    (3, (64, 56, 10, -16, 8, 17, 36)),
])
def test_surface_invariants(r, expected):
    assert as_tuple(surface_invariants(r)) == expected


@pytest.mark.parametrize('r', range(1, 11))
def test_invariant_relations_hold(r):
    assert all(surface_invariants(r).consistency().values())


def test_surface_invariants_rank_must_be_positive():
    with pytest.raises(ValueError):
        surface_invariants(0)


def test_hodge_diamond():
    assert hodge_diamond(2) == [[1, 4, 7], [4, 26, 4], [7, 4, 1]]


def test_kummer_periods_satisfy_quadratic_relation():
    mp = ModuliPoint(Lambda1=0.4, Lambda2=0.3)
    assert quadratic_relation_residual(QUARTIC, mp) < 1e-10
    product = kummer_period(QUARTIC, mp, 1, 1, 2) * kummer_period(QUARTIC, mp, 1, 1, 3)
    assert close(product, kummer_period(QUARTIC, mp, 1, 1, 1) * kummer_period(QUARTIC, mp, 1, 1, 4), 1e-10)


def test_kummer_period_index_checks():
    mp = ModuliPoint(Lambda1=0.4, Lambda2=0.3)
    with pytest.raises(ValueError):
        kummer_period(QUARTIC, mp, 2, 1, 1)
    with pytest.raises(ValueError):
        kummer_period(QUARTIC, mp, 1, 1, 5)


def test_moduli_exact():
    A, B = moduli_AB((Fraction(1, 2), Fraction(1, 3)))
    assert (A, B) == (Fraction(25, 24), Fraction(49, 24))
    with pytest.raises(SingularLocus):
        moduli_AB((Fraction(1, 2), 0))
    with pytest.raises(SingularLocus):
        moduli_AB_j6((Fraction(1), Fraction(1, 3)))


def test_moduli_numeric_matches_exact():
    A, B = moduli_AB(ModuliPoint(Lambda1=0.5, Lambda2=0.25))
    exact_A, exact_B = moduli_AB((Fraction(1, 2), Fraction(1, 4)))
    assert close(A, float(exact_A), 1e-14) and close(B, float(exact_B), 1e-14)


def test_moduli_point_rejects_special_locus():
    with pytest.raises(SingularLocus):
        ModuliPoint(Lambda1=0.4, Lambda2=-0.4)
    with pytest.raises(SingularLocus):
        ModuliPoint(Lambda1=2.0, Lambda2=0.5)


@pytest.mark.parametrize('triple', [(1, 1, 1), (2, 1, 2), (4, 3, 6)])
def test_two_form_scale(triple):
    sig = CurveSignature(r=triple[0], p=triple[1], q=triple[2])
    lhs, rhs = scale_consistency(sig, ModuliPoint(Lambda1=0.3, Lambda2=0.6))
    assert close(lhs, rhs, 1e-12)


def test_duality_row_values():
    row = duality_row_values(2, 0.2, 0.5)
    assert close(row['h'], 0.3, 1e-15)
    assert close(row['z1'], 1 / row['A'], 1e-14)
    with pytest.raises(ValueError):
        duality_row_values(5, 0.2, 0.5)


def test_duality_table_exact():
    assert duality_rows_exact().zero


def test_fibration_parameter_j6():
    data = fibration_data('J6', QUARTIC)
    assert close(data.U.evaluate(SPOT_POINT), 33 / 35, 1e-14)


def test_fibration_constraints():
    assert compatible('J5', RANK_FOUR) and compatible('J8', RANK_FOUR)
    assert not compatible('J5', QUARTIC)
    assert all(compatible(fid, QUARTIC) for fid in ('J4a', 'J4b', 'J6', 'J7'))
    with pytest.raises(ConstraintViolation) as info:
        fibration_data('J5', QUARTIC)
    assert info.value.which == 'q=3r-2p'
    with pytest.raises(ValueError):
        fibration_data('J9', QUARTIC)


def test_j7_on_legendre_curves():
    cert = verify_fibration_exact('J7', LEGENDRE)
    assert cert.zero and cert.passed


@pytest.mark.parametrize('fid', ['J4a', 'J4b', 'J6', 'J7'])
def test_fibrations_at_rank_two(fid):
    assert verify_fibration_exact(fid, QUARTIC).zero


def test_rank_one_is_compatible_with_every_fibration():
    assert all(compatible(fid, LEGENDRE) for fid in FIBRATIONS)


@pytest.mark.slow
@pytest.mark.parametrize('fid', ['J5', 'J8'])
def test_constrained_fibrations_at_rank_four(fid):
    assert verify_fibration_exact(fid, RANK_FOUR).zero


@pytest.mark.parametrize('sig', [LEGENDRE, QUARTIC])
def test_j7_twist_link(sig):
    assert verify_j7_twist_link(sig).zero


@pytest.mark.parametrize('sig', [LEGENDRE, QUARTIC])
def test_double_cover(sig):
    assert verify_double_cover(sig).zero


def test_base_change_ramification():
    checks = base_change_ramification()
    assert len(checks) == 4 and all(checks.values())


def test_base_change_j6():
    assert verify_base_change_j6(QUARTIC).zero
    with pytest.raises(ConstraintViolation):
        verify_base_change_j6(RANK_FOUR)


def test_legendre_links():
    assert verify_legendre_links(QUARTIC).zero


def test_legendre_links_negative_control():
    with pytest.raises(VerificationFailed):
        verify_legendre_links(QUARTIC, perturb=1)


@pytest.mark.parametrize('fid', ['J4a', 'J4b', 'J6', 'J7'])
def test_fibration_branch_is_pinned(fid):
    cert = verify_fibration_exact(fid, QUARTIC)
    assert cert.branch_order == 4
    assert cert.branch_index == fibration_data(fid, QUARTIC).root_index


@pytest.mark.parametrize('fid', ['J4a', 'J4b'])
@pytest.mark.parametrize('triple', [(3, 1, 3), (3, 5, 3)])
def test_coordinate_fibrations_land_on_the_principal_root(fid, triple):
    cert = verify_fibration_exact(fid, CurveSignature(r=triple[0], p=triple[1], q=triple[2]))
    assert cert.branch_index == 0 and cert.expected_index == 0


def test_negated_fiber_root_is_rejected():
    data = fibration_data('J7', LEGENDRE)
    with pytest.raises(VerificationFailed):
        certify_fibration(data, -data.target_root())


def test_rotated_fiber_root_is_rejected():
    data = fibration_data('J7', QUARTIC)
    i = ProductForm(data.Y.base, 1, phase=Fraction(1, 2))
    with pytest.raises(VerificationFailed):
        certify_fibration(data, i * data.target_root())


def test_sign_error_in_fiber_equation_is_rejected():
    data = fibration_data('J6', QUARTIC)
    minus_one_root = ProductForm(data.Y.base, 1, phase=Fraction(1, 4))
    with pytest.raises(VerificationFailed):
        certify_fibration(data, minus_one_root * data.target_root())


def test_j8_on_legendre_curves():
    assert verify_fibration_exact('J8', LEGENDRE).zero


def test_j8_fiber_equation_holds_numerically_at_rank_four():
    data = fibration_data('J8', RANK_FOUR)
    point = {k: complex(v) for k, v in SPOT_POINT.items()}
    lhs = data.Y.evaluate(point) ** 8
    rhs = 1
    for factor, exponent in data.target:
        rhs *= factor.evaluate(point) ** exponent
    assert abs(lhs / rhs - 1) < 1e-9
