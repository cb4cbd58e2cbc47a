import json

import pytest

from models.reports import CaseResult, Certificate, SuiteReport
from data_io.certificates import cached_certificate, certificate_key, certificate_path
from data_io.html_report import case_insight, generate_html_report
from data_io.reports import CSV_COLUMNS, load_report, summary_csv, write_csv_report, write_json_report


def case(name: str, passed: bool = True, **extra) -> CaseResult:
    residual = 1e-12 if passed else 1e-3
    return CaseResult(name=name, inputs={'beta1': 0.25}, abs_residual=residual, rel_residual=residual,
                      tolerance=1e-9, passed=passed, **extra)


def suite(name: str, *cases: CaseResult) -> SuiteReport:
    return SuiteReport.assemble(name, list(cases))


def test_certificate_key_depends_on_parameters():
    key = certificate_key('fibration', 'J7', (1, 1, 1))
    assert key == certificate_key('fibration', 'J7', (1, 1, 1))
    assert key != certificate_key('fibration', 'J7', (1, 1, 1), {'perturb': '1'})
    assert len(key) == 128


def test_cached_certificate_computes_once(tmp_path):
    calls = []

    def compute():
        calls.append(1)
        return Certificate(kind='demo', id='once', zero=True, method='factored')

    first, path = cached_certificate('demo', 'once', compute, cache_dir=tmp_path)
    second, again = cached_certificate('demo', 'once', compute, cache_dir=tmp_path)
    assert len(calls) == 1
    assert path == again and path.exists()
    assert second == first


def test_corrupt_cache_entry_is_recomputed(tmp_path):
    path = certificate_path(certificate_key('demo', 'broken'), tmp_path)
    path.write_text('{not json')
    cert, _ = cached_certificate('demo', 'broken',
                                 lambda: Certificate(kind='demo', id='broken', zero=True, method='factored'),
                                 cache_dir=tmp_path)
    assert cert.zero
    assert json.loads(path.read_text())['id'] == 'broken'


def test_suite_report_is_sorted_and_counted():
    report = suite('demo', case('b'), case('a', passed=False))
    assert [c.name for c in report.cases] == ['a', 'b']
    assert report.summary.total == 2 and report.summary.passed == 1
    assert not report.all_passed


def test_json_report_roundtrip(tmp_path):
    report = suite('demo', case('a'), case('b', passed=False, error='DomainError: outside'))
    path = write_json_report(report, tmp_path / 'nested' / 'demo.json')
    assert load_report(path) == report


def test_load_report_errors(tmp_path):
    with pytest.raises(ValueError):
        load_report(tmp_path / 'missing.json')
    bad = tmp_path / 'bad.json'
    bad.write_text('[1, 2')
    with pytest.raises(ValueError):
        load_report(bad)
    wrong = tmp_path / 'wrong.json'
    wrong.write_text('{"suite": "demo"}')
    with pytest.raises(ValueError):
        load_report(wrong)


def test_summary_csv_without_reports_is_header_only():
    assert summary_csv([]) == ','.join(CSV_COLUMNS) + '\n'


def test_summary_csv_single_report_has_no_footer(tmp_path):
    path = write_csv_report(suite('demo', case('a'), case('b', passed=False)), tmp_path / 'demo.csv')
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert lines[1].startswith('demo,a,') and lines[1].endswith(',pass')
    assert lines[2].endswith(',fail')


def test_summary_csv_footer_for_several_reports():
    text = summary_csv([('one', suite('one', case('a'))), ('two', suite('two', case('b', passed=False)))])
    footer = text.splitlines()[-1]
    assert footer.startswith('total,2,')
    assert footer.endswith('1 pass / 1 fail')


def test_case_insight_variants():
    assert 'holds' in case_insight(case('a'))
    assert 'fails' in case_insight(case('a', passed=False))
    assert 'raised' in case_insight(case('a', passed=False, error='DomainError: x'))
    assert 'reduces to zero' in case_insight(case('a', certificate='/tmp/certificate_abc.json'))


def test_html_report(tmp_path):
    output = tmp_path / 'html' / 'report.html'
    generate_html_report([suite('clausen', case('a')), suite('mirror', case('b', passed=False))], output)
    html = output.read_text()
    assert '1/2 passed' in html
    assert 'clausen (1/1)' in html and 'mirror (0/1)' in html
    assert '<strong>b</strong>' in html
