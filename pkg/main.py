#!/usr/bin/env python3

import json
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from misc.config import config
from misc.errors import NoConvergence, StepUnderflow, TermLimitExceeded, VerificationFailed
from models.curves import CurveSignature
from models.params import AppellF2Params, Hyp2F1Params
from models.reports import RunConfig, SuiteReport
from models.surfaces import ModuliPoint
from data_io.html_report import generate_html_report
from data_io.reports import load_report, summary_csv, write_csv_report, write_json_report
from hypergeometric.appell import eval_f2
from hypergeometric.series import eval_2f1, eval_3f2
from kummer.invariants import hodge_diamond, surface_invariants
from superelliptic.periods import period_closed
from identities.suites import SUITES, Case, run_cases, run_suite
from identities.clausen import verify_multivariate_clausen

logging.basicConfig(format="%(levelname)s | %(name)s | %(message)s",
                    handlers=[logging.StreamHandler()])
logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def format_value(value: complex) -> str:
    """15 significant digits; the imaginary part only when it is nonzero."""
    value = complex(value)
    if value.imag == 0:
        return f'{value.real:.15g}'
    return f'{value.real:.15g}{value.imag:+.15g}j'


def parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise ValueError(f"Not a number: {text!r}")


def evaluate(args) -> str:
    """The printed value(s) of one eval subcommand."""
    if args.kind == '2f1':
        return format_value(eval_2f1(Hyp2F1Params(a=args.a, b=args.b, c=args.c), args.z))
    if args.kind == '3f2':
        return format_value(eval_3f2(args.a1, args.a2, args.a3, args.b1, args.b2, args.z))
    if args.kind == 'f2':
        p = AppellF2Params(alpha=args.alpha, beta1=args.beta1, beta2=args.beta2,
                           gamma1=args.gamma1, gamma2=args.gamma2)
        return format_value(eval_f2(p, args.z1, args.z2))
    if args.kind == 'period':
        return format_value(period_closed(args.sig, args.cycle, args.k, args.lam))
    if args.kind == 'invariants':
        inv = surface_invariants(args.r)
        return json.dumps({**inv.model_dump(), 'hodge_diamond': hodge_diamond(args.r)}, indent=2)
    raise ValueError(f"Unknown eval kind {args.kind!r}")


def single_clausen_case(args) -> list[Case]:
    mp = ModuliPoint(Lambda1=args.lambda1, Lambda2=args.lambda2)
    return [Case(name=f'clausen[{args.beta1},{args.beta2};{args.lambda1},{args.lambda2}]',
                 fn=verify_multivariate_clausen,
                 kwargs={'beta1': args.beta1, 'beta2': args.beta2, 'mp': mp, 'tolerance': config.tolerance})]


def verify(run: RunConfig, args) -> SuiteReport:
    """Run a suite (or the single Clausen case given by flags) and write its report."""
    if args.beta1 is not None:
        report = SuiteReport.assemble(run.parameters['suite'], run_cases(single_clausen_case(args), run.parallelism))
    else:
        report = run_suite(args.suite, seed=run.seed, grid=args.grid, sigs=args.sigs,
                           tolerance=run.tolerance, parallelism=run.parallelism)
    output = Path(run.output)
    if run.format == 'csv':
        write_csv_report(report, output)
    else:
        write_json_report(report, output)
    print(f"{report.summary.passed}/{report.summary.total} cases passed; report written to {output}")
    return report


def summarize(paths: list[Path], output: Path | None, html: Path | None) -> str:
    """CSV summary of several reports, printed or written; optionally an HTML page too."""
    reports = [(p.stem, load_report(p)) for p in paths]
    text = summary_csv(reports)
    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text)
        print(f"Summary written to {output}")
    else:
        print(text, end='')
    if html:
        generate_html_report([r for _, r in reports], html)
        print(f"HTML report generated: {html}")
    return text


def parse_signatures(text: str) -> list[CurveSignature]:
    return [CurveSignature.parse(chunk) for chunk in text.split(';') if chunk.strip()]


def build_parser():
    import argparse

    parser = argparse.ArgumentParser(description='Numerical and exact verification of the multivariate '
                                                 'Clausen identity and its surface geometry')
    parser.add_argument('--verbose', '-v', action='store_true', help='Debug logging')
    subparsers = parser.add_subparsers(dest='command', required=True)

    # eval subcommand
    eval_parser = subparsers.add_parser('eval', help='Evaluate one function')
    kinds = eval_parser.add_subparsers(dest='kind', required=True)
    p2f1 = kinds.add_parser('2f1', help='Gauss 2F1(a, b; c; z)')
    for name in ('a', 'b', 'c', 'z'):
        p2f1.add_argument(f'--{name}', type=parse_complex, required=True)
    p3f2 = kinds.add_parser('3f2', help='3F2(a1, a2, a3; b1, b2; z)')
    for name in ('a1', 'a2', 'a3', 'b1', 'b2', 'z'):
        p3f2.add_argument(f'--{name}', type=parse_complex, required=True)
    pf2 = kinds.add_parser('f2', help='Appell F2(α; β1, β2; γ1, γ2; z1, z2)')
    for name in ('alpha', 'beta1', 'beta2', 'gamma1', 'gamma2', 'z1', 'z2'):
        pf2.add_argument(f'--{name}', type=parse_complex, required=True)
    pper = kinds.add_parser('period', help='Closed-form period of dx/y')
    pper.add_argument('--sig', type=CurveSignature.parse, required=True, help='r,p,q')
    pper.add_argument('--cycle', choices=('A', 'B'), required=True)
    pper.add_argument('--k', type=int, default=1)
    pper.add_argument('--lambda', dest='lam', type=parse_complex, required=True)
    pinv = kinds.add_parser('invariants', help='Invariants of the surface of rank r')
    pinv.add_argument('--r', type=int, required=True)

    # verify subcommand
    verify_parser = subparsers.add_parser('verify', help='Run a verification suite and write a report')
    verify_parser.add_argument('suite', choices=SUITES + ('all',))
    verify_parser.add_argument('--grid', choices=('default', 'quick'), default='default')
    verify_parser.add_argument('--sigs', type=parse_signatures, default=None,
                               help='Signatures for the fibrations suite, e.g. "1,1,1;2,1,2"')
    verify_parser.add_argument('--seed', type=int, default=None)
    verify_parser.add_argument('--tol', type=float, default=None, help='Tolerance of series identities')
    verify_parser.add_argument('--par', type=int, default=None, help='Worker processes')
    verify_parser.add_argument('--output', type=Path, default=None)
    verify_parser.add_argument('--format', choices=('json', 'csv'), default='json')
    for name in ('beta1', 'beta2', 'lambda1', 'lambda2'):
        verify_parser.add_argument(f'--{name}', type=float, default=None,
                                   help='Single Clausen case instead of the grid')

    # report subcommand
    report_parser = subparsers.add_parser('report', help='Summarize report files as CSV')
    report_parser.add_argument('reports', type=Path, nargs='*')
    report_parser.add_argument('--output', type=Path, default=None)
    report_parser.add_argument('--html', type=Path, default=None)
    return parser


def run_config(args, parser) -> RunConfig:
    """Apply flag overrides to the environment configuration; flags win."""
    try:
        if args.tol is not None:
            config.tolerance = args.tol
        if args.par is not None:
            config.parallelism = args.par
        if args.seed is not None:
            config.seed = args.seed
    except ValidationError as e:
        parser.error(str(e.errors()[0]['msg']))
    single = [args.beta1, args.beta2, args.lambda1, args.lambda2]
    if any(v is not None for v in single):
        if any(v is None for v in single):
            parser.error('--beta1, --beta2, --lambda1 and --lambda2 go together')
        if args.suite != 'clausen':
            parser.error('A single case is only supported for the clausen suite')
        if not (args.beta1 > 0 and args.beta2 > 0):
            parser.error(f'β1 and β2 must be positive, got ({args.beta1}, {args.beta2})')
    output = args.output or config.output_dir / f'{args.suite}.{args.format}'
    return RunConfig(command='verify', parameters={'suite': args.suite, 'grid': args.grid},
                     tolerance=config.tolerance, output=str(output), format=args.format,
                     parallelism=config.parallelism, seed=config.seed)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.getLogger().setLevel(logging.DEBUG if args.verbose else config.log_level)

    try:
        if args.command == 'eval':
            print(evaluate(args))
            return EXIT_OK
        if args.command == 'verify':
            report = verify(run_config(args, parser), args)
            return EXIT_OK if report.all_passed else EXIT_FAILED
        if args.command == 'report':
            summarize(args.reports, args.output, args.html)
            return EXIT_OK
    except VerificationFailed as e:
        logger.error(str(e))
        return EXIT_FAILED
    except OSError as e:
        logger.error(f"Cannot access {e.filename or 'file'}: {e.strerror or e}")
        return EXIT_USAGE
    except (ValueError, NoConvergence, StepUnderflow, TermLimitExceeded) as e:
        logger.error(str(e))
        return EXIT_USAGE if args.command == 'report' else EXIT_DOMAIN
    return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
