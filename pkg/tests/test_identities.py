from pathlib import Path

import numpy as np
import pytest

from misc.errors import DomainError
from models.curves import CurveSignature
from models.surfaces import ModuliPoint
from identities.clausen import (clausen_3f2_argument, duality_row, swapped_moduli, verify_clausen_3f2,
                                verify_kummer_quadratic, verify_multivariate_clausen, verify_symmetry_swap)
from identities.mirror import mirror_map_check, modulus_coefficients, small_modulus_expansion
from identities.periods import f2_period_double_integral, route_consistency, verify_period_equality
from identities.suites import (CLAUSEN_MODULI, SUITES, Case, build_cases, invariants_certificate, run_case,
                               run_suite)
from tests.helpers import close

QUARTIC = CurveSignature(r=2, p=1, q=2)


@pytest.mark.parametrize('point', CLAUSEN_MODULI)
@pytest.mark.parametrize('betas', [(0.25, 0.375), (0.5, 0.5), (0.125, 0.625)])
def test_multivariate_clausen(betas, point):
    report = verify_multivariate_clausen(*betas, ModuliPoint(Lambda1=point[0], Lambda2=point[1]))
    assert report.passed, report.rel_residual


def test_multivariate_clausen_outside_series_disk():
    with pytest.raises(DomainError):
        verify_multivariate_clausen(0.25, 0.375, ModuliPoint(Lambda1=0.3, Lambda2=0.4))


def test_multivariate_clausen_needs_positive_betas():
    with pytest.raises(DomainError):
        verify_multivariate_clausen(-0.5, 0.375, ModuliPoint(Lambda1=0.2, Lambda2=0.9))


@pytest.mark.parametrize('betas,point', [((0.5, 0.5), (0.1, 0.8)), ((0.25, 0.375), (0.12, 0.9))])
def test_symmetry_swap(betas, point):
    report = verify_symmetry_swap(*betas, ModuliPoint(Lambda1=point[0], Lambda2=point[1]))
    assert report.passed
    assert report.inputs['moduli_image'] < 1e-10


def test_swapped_moduli_exchanges_mapped_variables():
    mp = ModuliPoint(Lambda1=0.1, Lambda2=0.8)
    image = swapped_moduli(mp)
    assert close(image.Lambda1, -0.2 / 1.8, 1e-15)
    assert close(image.Lambda2, 1.1 / 0.9, 1e-15)


def test_duality_row_two():
    record, report = duality_row(2, ModuliPoint(Lambda1=0.2, Lambda2=0.5), tolerance=1e-7)
    assert close(record.h.to_complex(), 0.3, 1e-15)
    assert record.relations_hold
    assert report.passed, report.rel_residual


def test_duality_row_one_by_series():
    record, report = duality_row(1, ModuliPoint(Lambda1=0.2, Lambda2=0.9), beta1=0.5, beta2=0.5)
    assert record.row == 1 and report.passed


def test_duality_row_number():
    with pytest.raises(ValueError):
        duality_row(0, ModuliPoint(Lambda1=0.2, Lambda2=0.5))


@pytest.mark.parametrize('betas,lam', [((0.25, 0.375), 0.3), ((0.5, 0.5), 0.6), ((0.3, 0.45), 0.1)])
def test_kummer_quadratic_report(betas, lam):
    report = verify_kummer_quadratic(*betas, lam)
    assert report.passed
    assert report.inputs['second_identity'] < 1e-9


@pytest.mark.parametrize('betas,lam', [((0.25, 0.375), 0.2), ((0.5, 0.5), 0.3), ((0.125, 0.625), 0.35)])
def test_clausen_3f2(betas, lam):
    report = verify_clausen_3f2(*betas, lam)
    assert report.passed
    assert report.inputs['clausen_square'] < 1e-9


def test_clausen_3f2_argument():
    assert close(clausen_3f2_argument(0.5), -4 * 0.25 / 0.75 ** 2, 1e-15)


def test_mirror_coefficients():
    assert np.allclose(modulus_coefficients(), [4, -16, 56])


@pytest.mark.parametrize('lam', [0.005, 0.01, 0.02])
def test_mirror_map(lam):
    report = mirror_map_check(lam)
    assert report.passed, report.rel_residual
    assert report.inputs['coefficient_gap'] < 1e-12


def test_small_modulus_expansion_is_logarithmic():
    assert close(small_modulus_expansion(0.1) - small_modulus_expansion(0.05), 4 * np.log(2) + 0.0075, 1e-4)


@pytest.mark.parametrize('lam', [0.0, 0.3, 0.01 + 0.01j])
def test_mirror_map_window(lam):
    with pytest.raises(DomainError):
        mirror_map_check(lam)


@pytest.mark.parametrize('triple,moduli', [((1, 1, 1), (1.5, 3.0)), ((2, 1, 2), (1.2, 2.0))])
def test_f2_period_double_integral(triple, moduli):
    sig = CurveSignature(r=triple[0], p=triple[1], q=triple[2])
    assert f2_period_double_integral(sig, *moduli).passed


def test_f2_period_double_integral_domain():
    with pytest.raises(DomainError):
        f2_period_double_integral(QUARTIC, 0.5, 2.0)
    with pytest.raises(ValueError):
        f2_period_double_integral(QUARTIC, 1.5, 2.0, k=4)


def test_period_equality():
    report = verify_period_equality(QUARTIC, ModuliPoint(Lambda1=0.1, Lambda2=0.8), 1, 1)
    assert report.passed, report.rel_residual


def test_period_equality_needs_rank_two():
    with pytest.raises(ValueError):
        verify_period_equality(CurveSignature(r=1, p=1, q=1), ModuliPoint(Lambda1=0.1, Lambda2=0.8), 1, 1)


def test_routes_agree():
    assert route_consistency(QUARTIC, ModuliPoint(Lambda1=0.1, Lambda2=0.8), 1, 1) < 1e-6


def test_build_cases_is_reproducible():
    first = build_cases('duality', seed=7, grid='quick')
    again = build_cases('duality', seed=7, grid='quick')
    other = build_cases('duality', seed=8, grid='quick')
    assert [c.kwargs for c in first] == [c.kwargs for c in again]
    assert [c.kwargs for c in first] != [c.kwargs for c in other]
    assert len(first) == 4 * 2 + 1


def test_build_cases_errors():
    with pytest.raises(ValueError):
        build_cases('nonsense')
    with pytest.raises(ValueError):
        build_cases('mirror', grid='huge')


def test_all_suites_have_cases():
    names = [c.name for c in build_cases('all', grid='quick', sigs=[(1, 1, 1)])]
    assert len(names) == len(set(names))
    assert any(n.startswith('mirror[') for n in names)
    assert len(SUITES) == 8


def test_run_case_turns_errors_into_rows():
    result = run_case(Case(name='mirror[bad]', fn=mirror_map_check, kwargs={'lam': 0.5}))
    assert not result.passed
    assert result.error.startswith('DomainError')
    assert result.name == 'mirror[bad]'


def test_run_case_caches_certificates():
    case = Case(name='invariants[r=02]', fn=invariants_certificate, kwargs={'r': 2})
    result = run_case(case)
    assert result.passed
    assert Path(result.certificate).exists()
    assert run_case(case).certificate == result.certificate


def test_run_suite_mirror():
    report = run_suite('mirror', parallelism=1)
    assert report.all_passed
    assert [c.name for c in report.cases] == sorted(c.name for c in report.cases)
