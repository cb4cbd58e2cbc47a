"""Reading and writing suite reports as JSON and CSV."""

import csv
import io
import json
import logging
from pathlib import Path

from models.reports import SuiteReport

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['report', 'name', 'inputs', 'abs_residual', 'rel_residual', 'tolerance', 'status']


def write_json_report(report: SuiteReport, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2))
    logger.info(f"Wrote {report.summary.passed}/{report.summary.total} passing cases to {path}")
    return path


def load_report(path: Path) -> SuiteReport:
    """
    Raises
    ------
    ValueError
        When the file is missing, not JSON, or not a suite report.
    """
    try:
        return SuiteReport(**json.loads(Path(path).read_text()))
    except (OSError, json.JSONDecodeError, TypeError) as e:
        raise ValueError(f"Cannot read report {path}: {e}")


def _status(passed: bool) -> str:
    return 'pass' if passed else 'fail'


def summary_rows(reports: list[tuple[str, SuiteReport]]) -> list[list[str]]:
    """One row per case, in report order, then by case name."""
    rows = []
    for label, report in reports:
        for case in report.cases:
            rows.append([label, case.name, json.dumps(case.inputs, sort_keys=True),
                         f'{case.abs_residual:.6e}', f'{case.rel_residual:.6e}',
                         f'{case.tolerance:.1e}', _status(case.passed)])
    return rows


def summary_csv(reports: list[tuple[str, SuiteReport]]) -> str:
    """
    CSV table of every case; with more than one report a footer row counts passes and failures.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    rows = summary_rows(reports)
    writer.writerows(rows)
    if len(reports) > 1:
        passed = sum(row[-1] == 'pass' for row in rows)
        writer.writerow(['total', str(len(rows)), '', '', '', '', f'{passed} pass / {len(rows) - passed} fail'])
    return buffer.getvalue()


def write_csv_report(report: SuiteReport, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(summary_csv([(report.suite, report)]))
    logger.info(f"Wrote CSV summary of {report.suite} to {path}")
    return path
