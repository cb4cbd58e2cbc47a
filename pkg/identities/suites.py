"""
Named verification suites.

A suite is a list of independent cases. Each case calls one verifier with fixed
keyword arguments and yields an IdentityReport (numeric identities) or a Certificate
(exact identities, cached on disk). Random grids come from numpy's seeded generator,
so a fixed seed reproduces the same cases.
"""

import logging
import multiprocessing
from fractions import Fraction
from typing import Any, Callable, Literal

import numpy as np
from pydantic import BaseModel, Field

from misc.config import config
from models.curves import CurveSignature
from models.reports import CaseResult, Certificate, IdentityReport, SuiteReport
from models.surfaces import ModuliPoint
from data_io.certificates import cached_certificate
from superelliptic.periods import period_closed, period_quadrature
from superelliptic.curves import enumerate_signatures
from superelliptic.swmodel import verify_correspondence, verify_swmodel
from pfaffian.gauge import decomposition_check_exact, decomposition_residual
from kummer.fibrations import FIBRATIONS, compatible, verify_fibration_exact
from kummer.invariants import surface_invariants
from kummer.links import (duality_rows_exact, verify_base_change_j6, verify_double_cover,
                          verify_j7_twist_link, verify_legendre_links)
from identities.clausen import (duality_row, verify_clausen_3f2, verify_kummer_quadratic,
                                verify_multivariate_clausen, verify_symmetry_swap)
from identities.mirror import mirror_map_check
from identities.periods import f2_period_double_integral, verify_period_equality

logger = logging.getLogger(__name__)

Suite = Literal['clausen', 'duality', 'kummer-quadratic', 'clausen3f2', 'pfaffian',
                'fibrations', 'periods', 'mirror', 'all']
SUITES: tuple[str, ...] = ('clausen', 'duality', 'kummer-quadratic', 'clausen3f2', 'pfaffian',
                           'fibrations', 'periods', 'mirror')

BETA_GRID = (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8), Fraction(1, 2), Fraction(5, 8))
CLAUSEN_MODULI = ((0.2, 0.9), (0.15, 0.85), (0.1, 0.8), (0.1, 0.9))
SYMMETRY_CASES = ((Fraction(1, 2), Fraction(1, 2), (0.1, 0.8)), (Fraction(1, 4), Fraction(3, 8), (0.12, 0.9)))
DEFAULT_SIGNATURES = ((1, 1, 1), (2, 1, 2), (3, 5, 3), (4, 3, 6))
EXACT_PFAFFIAN = ((Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 4), Fraction(3, 8)))
PERIOD_LAMBDAS = (0.2, 0.5, 0.8)
F2_PERIOD_POINTS = {(1, 1, 1): ((25 / 24, 49 / 24), (1.5, 3.0)), (2, 1, 2): ((1.2, 2.0), (1.5, 2.5))}
EQUALITY_POINTS = {(2, 1, 2): ((0.3, 0.4), (0.1, 0.8)), (3, 5, 3): ((0.25, 0.35), (0.1, 0.8))}
MIRROR_LAMBDAS = (0.005, 0.01, 0.02)
PERIOD_ORACLE_TOL = 1e-8
DECOMPOSITION_TOL = 1e-9


class Case(BaseModel):
    """One verifier call of a suite."""
    model_config = {'arbitrary_types_allowed': True}

    name: str = Field(description="Unique label, used to order the report")
    fn: Callable[..., Any]
    kwargs: dict[str, Any] = Field(default_factory=dict)


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _mp(pair) -> ModuliPoint:
    return ModuliPoint(Lambda1=pair[0], Lambda2=pair[1])


def _sig(t) -> CurveSignature:
    return t if isinstance(t, CurveSignature) else CurveSignature(r=t[0], p=t[1], q=t[2])


def period_oracle_case(sig: CurveSignature, cycle: str, k: int, lam: float) -> IdentityReport:
    """Closed-form period against tanh-sinh quadrature on the real segment."""
    closed = period_closed(sig, cycle, k, lam)
    quad = period_quadrature(sig, cycle, k, lam)
    return IdentityReport.compare(f'period-{cycle}', closed, quad, PERIOD_ORACLE_TOL,
                                  {'signature': str(sig), 'cycle': cycle, 'k': k, 'lambda': lam})


def decomposition_case(beta1: float, beta2: float, lam1: complex, lam2: complex,
                       tolerance: float = DECOMPOSITION_TOL) -> IdentityReport:
    """Numeric residual of the gauge relation, reported against zero."""
    residual = decomposition_residual(beta1, beta2, lam1, lam2)
    return IdentityReport.compare('pfaffian-decomposition', residual, 0.0, tolerance,
                                  {'beta1': beta1, 'beta2': beta2, 'Lambda1': float(np.real(lam1)),
                                   'Lambda2': float(np.real(lam2))})


def duality_case(n: int, mp: ModuliPoint, beta1: float, beta2: float, tolerance: float) -> IdentityReport:
    return duality_row(n, mp, beta1, beta2, tolerance)[1]


def invariants_certificate(r: int) -> Certificate:
    """Noether, signature, χ and Hodge relations of the invariants at rank r."""
    inv = surface_invariants(r)
    failed = [name for name, ok in inv.consistency().items() if not ok]
    return Certificate(kind='invariants', id=f'r={r}', parameters={'r': str(r)}, zero=not failed,
                       residuals=failed, notes=[inv.model_dump_json()])


def pfaffian_certificate(beta1: Fraction, beta2: Fraction) -> Certificate:
    return decomposition_check_exact(beta1, beta2)


def clausen_cases(grid: str, tolerance: float, **_) -> list[Case]:
    betas = BETA_GRID if grid == 'default' else BETA_GRID[1:4]
    moduli = CLAUSEN_MODULI if grid == 'default' else CLAUSEN_MODULI[:1]
    cases = [Case(name=f'clausen[{_frac(b1)},{_frac(b2)};{l1},{l2}]', fn=verify_multivariate_clausen,
                  kwargs={'beta1': float(b1), 'beta2': float(b2), 'mp': _mp((l1, l2)), 'tolerance': tolerance})
             for b1 in betas for b2 in betas for l1, l2 in moduli]
    cases += [Case(name=f'symmetry[{_frac(b1)},{_frac(b2)};{pt[0]},{pt[1]}]', fn=verify_symmetry_swap,
                   kwargs={'beta1': float(b1), 'beta2': float(b2), 'mp': _mp(pt), 'tolerance': tolerance})
              for b1, b2, pt in SYMMETRY_CASES]
    return cases


def duality_cases(rng: np.random.Generator, tolerance: float, grid: str, **_) -> list[Case]:
    count = 10 if grid == 'default' else 2
    cases = []
    for n in range(1, 5):
        for i in range(count):
            b1, b2 = (float(b) for b in rng.choice(BETA_GRID, size=2))
            pt = (round(float(rng.uniform(0.1, 0.4)), 6), round(float(rng.uniform(0.6, 0.9)), 6))
            cases.append(Case(name=f'duality[row{n}#{i}]', fn=duality_case,
                              kwargs={'n': n, 'mp': _mp(pt), 'beta1': b1, 'beta2': b2, 'tolerance': tolerance}))
    cases.append(Case(name='duality[exact]', fn=duality_rows_exact))
    return cases


def _random_betas(rng: np.random.Generator) -> tuple[float, float]:
    return round(float(rng.uniform(0.1, 0.9)), 6), round(float(rng.uniform(0.1, 0.9)), 6)


def kummer_quadratic_cases(rng: np.random.Generator, tolerance: float, grid: str, **_) -> list[Case]:
    count = 20 if grid == 'default' else 4
    cases = []
    for i in range(count):
        b1, b2 = _random_betas(rng)
        lam = round(float(rng.uniform(0.05, 0.6)), 6)
        cases.append(Case(name=f'kummer-quadratic[#{i:02d}]', fn=verify_kummer_quadratic,
                          kwargs={'beta1': b1, 'beta2': b2, 'Lam': lam, 'tolerance': tolerance}))
    return cases


def clausen_3f2_cases(rng: np.random.Generator, tolerance: float, grid: str, **_) -> list[Case]:
    count = 20 if grid == 'default' else 4
    cases = []
    for i in range(count):
        b1, b2 = _random_betas(rng)
        lam = round(float(rng.uniform(0.0, 0.4)), 6)
        cases.append(Case(name=f'clausen3f2[#{i:02d}]', fn=verify_clausen_3f2,
                          kwargs={'beta1': b1, 'beta2': b2, 'lam1': lam, 'tolerance': tolerance}))
    return cases


def pfaffian_cases(rng: np.random.Generator, tolerance: float, grid: str, **_) -> list[Case]:
    count = 50 if grid == 'default' else 5
    cases = [Case(name=f'pfaffian[exact;{_frac(b1)},{_frac(b2)}]', fn=pfaffian_certificate,
                  kwargs={'beta1': b1, 'beta2': b2})
             for b1, b2 in EXACT_PFAFFIAN]
    for i in range(count):
        b1, b2 = _random_betas(rng)
        l1, l2 = round(float(rng.uniform(0.1, 0.4)), 6), round(float(rng.uniform(0.5, 0.9)), 6)
        cases.append(Case(name=f'pfaffian[#{i:02d}]', fn=decomposition_case,
                          kwargs={'beta1': b1, 'beta2': b2, 'lam1': l1, 'lam2': l2, 'tolerance': tolerance}))
    return cases


def fibration_cases(sigs: list[CurveSignature], **_) -> list[Case]:
    cases = []
    for sig in sigs:
        for fid in FIBRATIONS:
            if compatible(fid, sig):
                cases.append(Case(name=f'fibration[{fid};{sig}]', fn=verify_fibration_exact,
                                  kwargs={'fid': fid, 'sig': sig}))
        cases.append(Case(name=f'j7-twist[{sig}]', fn=verify_j7_twist_link, kwargs={'sig': sig}))
        cases.append(Case(name=f'double-cover[{sig}]', fn=verify_double_cover, kwargs={'sig': sig}))
        cases.append(Case(name=f'swmodel[{sig}]', fn=verify_swmodel, kwargs={'sig': sig}))
        if sig.q == sig.r:
            cases.append(Case(name=f'base-change-j6[{sig}]', fn=verify_base_change_j6, kwargs={'sig': sig}))
            cases.append(Case(name=f'legendre-links[{sig}]', fn=verify_legendre_links, kwargs={'sig': sig}))
            cases.append(Case(name=f'correspondence[{sig}]', fn=verify_correspondence, kwargs={'sig': sig}))
    cases += [Case(name=f'invariants[r={r:02d}]', fn=invariants_certificate, kwargs={'r': r}) for r in range(1, 11)]
    return cases


def period_cases(grid: str, **_) -> list[Case]:
    r_max = 4 if grid == 'default' else 2
    cases = [Case(name=f'period[{sig};{cycle}{k};{lam}]', fn=period_oracle_case,
                  kwargs={'sig': sig, 'cycle': cycle, 'k': k, 'lam': lam})
             for sig in enumerate_signatures(r_max)
             for cycle in ('A', 'B')
             for k in range(1, 2 * sig.r)
             for lam in PERIOD_LAMBDAS]
    for t, points in F2_PERIOD_POINTS.items():
        for A, B in points:
            cases.append(Case(name=f'f2-period[{_sig(t)};{A:.6g},{B:.6g}]', fn=f2_period_double_integral,
                              kwargs={'sig': _sig(t), 'A': A, 'B': B}))
    for t, points in EQUALITY_POINTS.items():
        sig = _sig(t)
        for pt in points:
            for i in range(1, sig.r):
                for j in range(1, sig.r):
                    cases.append(Case(name=f'period-equality[{sig};{pt[0]},{pt[1]};{i},{j}]',
                                      fn=verify_period_equality,
                                      kwargs={'sig': sig, 'mp': _mp(pt), 'i': i, 'j': j}))
    return cases


def mirror_cases(**_) -> list[Case]:
    return [Case(name=f'mirror[{lam}]', fn=mirror_map_check, kwargs={'lam': lam}) for lam in MIRROR_LAMBDAS]


BUILDERS: dict[str, Callable[..., list[Case]]] = {
    'clausen': clausen_cases,
    'duality': duality_cases,
    'kummer-quadratic': kummer_quadratic_cases,
    'clausen3f2': clausen_3f2_cases,
    'pfaffian': pfaffian_cases,
    'fibrations': fibration_cases,
    'periods': period_cases,
    'mirror': mirror_cases,
}


def build_cases(suite: Suite, seed: int | None = None, grid: str = 'default',
                sigs: list[CurveSignature] | None = None, tolerance: float | None = None) -> list[Case]:
    """
    Cases of a named suite; 'all' concatenates every suite in a fixed order.

    Raises
    ------
    ValueError
        For an unknown suite or grid name.
    """
    if grid not in ('default', 'quick'):
        raise ValueError(f"Unknown grid {grid!r}; expected 'default' or 'quick'")
    names = SUITES if suite == 'all' else (suite,)
    cases = []
    for name in names:
        if name not in BUILDERS:
            raise ValueError(f"Unknown suite {name!r}; expected one of {', '.join(SUITES + ('all',))}")
        # one generator per suite keeps each suite's grid independent of the others
        rng = np.random.default_rng([config.seed if seed is None else seed, SUITES.index(name)])
        cases += BUILDERS[name](rng=rng, grid=grid, tolerance=tolerance or config.tolerance,
                                sigs=[_sig(s) for s in (sigs or DEFAULT_SIGNATURES)])
    logger.info(f"Suite {suite}: {len(cases)} cases")
    return cases


def _certificate_parameters(kwargs: dict[str, Any]) -> dict[str, str]:
    return {k: str(v) for k, v in sorted(kwargs.items())}


def run_case(case: Case) -> CaseResult:
    """Run one case; domain and verification errors become failing rows."""
    try:
        if case.fn in CERTIFICATE_FUNCTIONS:
            kind = getattr(case.fn, '__name__', 'certificate')
            cert, path = cached_certificate(kind, case.name, lambda: case.fn(**case.kwargs),
                                            parameters=_certificate_parameters(case.kwargs))
            result = CaseResult.from_certificate(cert, str(path))
        else:
            result = CaseResult.from_report(case.fn(**case.kwargs))
    except (ValueError, ArithmeticError, RuntimeError) as e:
        logger.warning(f"Case {case.name} failed: {type(e).__name__}: {e}")
        return CaseResult(name=case.name, inputs={k: str(v) for k, v in case.kwargs.items()},
                          abs_residual=1.0, rel_residual=1.0, tolerance=0.0, passed=False,
                          error=f'{type(e).__name__}: {e}')
    return result.model_copy(update={'name': case.name})


CERTIFICATE_FUNCTIONS = {
    verify_fibration_exact, verify_j7_twist_link, verify_double_cover, verify_swmodel,
    verify_base_change_j6, verify_legendre_links, verify_correspondence, duality_rows_exact,
    invariants_certificate, pfaffian_certificate,
}


def run_cases(cases: list[Case], parallelism: int | None = None) -> list[CaseResult]:
    processes = parallelism or config.parallelism
    if processes > 1 and len(cases) > 1:
        with multiprocessing.Pool(processes=min(processes, len(cases))) as pool:
            return pool.map(run_case, cases)
    return [run_case(c) for c in cases]


def run_suite(suite: Suite, seed: int | None = None, grid: str = 'default',
              sigs: list[CurveSignature] | None = None, tolerance: float | None = None,
              parallelism: int | None = None) -> SuiteReport:
    """Build, run and assemble a suite; the report is ordered by case name."""
    cases = build_cases(suite, seed, grid, sigs, tolerance)
    report = SuiteReport.assemble(suite, run_cases(cases, parallelism))
    logger.info(f"Suite {suite}: {report.summary.passed}/{report.summary.total} passed")
    return report
