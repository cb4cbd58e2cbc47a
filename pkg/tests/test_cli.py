import json

import pytest

import main as cli
from misc.config import config
from misc.errors import StepUnderflow, TermLimitExceeded
from main import EXIT_DOMAIN, EXIT_FAILED, EXIT_OK, EXIT_USAGE, format_value, main, parse_complex
from data_io.reports import load_report

CLAUSEN_CASE = ['--beta1', '0.25', '--beta2', '0.375', '--lambda1', '0.2', '--lambda2', '0.9']


def test_format_value():
    assert format_value(0.5) == '0.5'
    assert format_value(1 - 2j) == '1-2j'


def test_parse_complex_accepts_i():
    assert parse_complex('0.5+1i') == 0.5 + 1j
    with pytest.raises(ValueError):
        parse_complex('half')


def test_eval_2f1(capsys):
    assert main(['eval', '2f1', '--a', '1', '--b', '1', '--c', '2', '--z', '0.5']) == EXIT_OK
    assert abs(complex(capsys.readouterr().out.strip()) - 1.3862943611198906) < 1e-13


def test_eval_invariants(capsys):
    assert main(['eval', 'invariants', '--r', '2']) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data['K2'] == 16 and data['h11'] == 26
    assert data['hodge_diamond'][1] == [4, 26, 4]


def test_eval_period(capsys):
    assert main(['eval', 'period', '--sig', '1,1,1', '--cycle', 'A', '--lambda', '0.5']) == EXIT_OK
    assert capsys.readouterr().out.strip()


def test_eval_domain_error():
    assert main(['eval', '2f1', '--a', '0.5', '--b', '0.5', '--c', '1.5', '--z', '2']) == EXIT_DOMAIN
    assert main(['eval', 'period', '--sig', '1,1,1', '--cycle', 'A', '--lambda', '0']) == EXIT_DOMAIN


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(['verify', 'nonsense'])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(['verify', 'clausen', '--beta1', '-0.5', '--beta2', '0.375', '--lambda1', '0.2', '--lambda2', '0.9'])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(['verify', 'clausen', '--beta1', '0.25'])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(['verify', 'mirror', *CLAUSEN_CASE])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(['verify', 'mirror', '--tol', '2'])
    assert info.value.code == EXIT_USAGE


def test_verify_single_clausen_case(tmp_path, capsys):
    output = tmp_path / 'clausen.json'
    assert main(['verify', 'clausen', *CLAUSEN_CASE, '--output', str(output)]) == EXIT_OK
    report = load_report(output)
    assert report.summary.total == 1 and report.all_passed
    assert '1/1 cases passed' in capsys.readouterr().out


def test_verify_reports_failures(tmp_path):
    output = tmp_path / 'clausen.json'
    code = main(['verify', 'clausen', *CLAUSEN_CASE, '--tol', '1e-30', '--output', str(output)])
    assert code == EXIT_FAILED
    assert not load_report(output).all_passed


def test_verify_mirror_csv(tmp_path):
    output = tmp_path / 'mirror.csv'
    assert main(['verify', 'mirror', '--format', 'csv', '--output', str(output)]) == EXIT_OK
    assert len(output.read_text().splitlines()) == 4


def test_verify_default_output_location(tmp_path):
    assert main(['verify', 'mirror']) == EXIT_OK
    assert (tmp_path / 'artifacts' / 'mirror.json').exists()


def test_report_summary_and_html(tmp_path, capsys):
    first, second = tmp_path / 'one.json', tmp_path / 'two.json'
    main(['verify', 'mirror', '--output', str(first)])
    main(['verify', 'clausen', *CLAUSEN_CASE, '--output', str(second)])
    capsys.readouterr()
    html = tmp_path / 'report.html'
    assert main(['report', str(first), str(second), '--html', str(html)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith('report,name')
    assert '4 pass / 0 fail' in out
    assert html.exists()


def test_report_missing_file(tmp_path):
    assert main(['report', str(tmp_path / 'missing.json')]) == EXIT_USAGE


@pytest.mark.parametrize('error', [StepUnderflow('step size below 1e-14'), TermLimitExceeded('2000001 terms')])
def test_runtime_limits_exit_as_domain_errors(monkeypatch, error):
    def failing(args):
        raise error

    monkeypatch.setattr(cli, 'evaluate', failing)
    assert main(['eval', 'invariants', '--r', '2']) == EXIT_DOMAIN


def test_report_to_unwritable_output(tmp_path):
    first = tmp_path / 'one.json'
    main(['verify', 'mirror', '--output', str(first)])
    assert main(['report', str(first), '--output', str(tmp_path)]) == EXIT_USAGE


def test_config_validates_assignment():
    with pytest.raises(ValueError):
        config.tolerance = 2.0
    with pytest.raises(ValueError):
        config.parallelism = 0
    config.seed = 7
    assert config.seed == 7
