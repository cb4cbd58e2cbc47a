"""HTML summary of one or more suite reports."""

import json
import markdown
from pathlib import Path
from models.reports import CaseResult, SuiteReport


def case_insight(case: CaseResult) -> str:
    """Markdown line describing one case."""
    if case.error:
        return f"❌ **{case.name}** raised `{case.error}`"
    if case.certificate:
        verdict = "reduces to zero" if case.passed else "leaves a nonzero residual"
        return f"{'✅' if case.passed else '❌'} **{case.name}** {verdict} (certificate `{Path(case.certificate).name}`)"
    if case.passed:
        return f"✅ **{case.name}** holds (residual {case.rel_residual:.2e} ≤ {case.tolerance:.1e})"
    return (f"❌ **{case.name}** fails: |lhs - rhs| = {case.abs_residual:.3e}, "
            f"relative {case.rel_residual:.3e} > {case.tolerance:.1e}")


def generate_html_report(reports: list[SuiteReport], output_path: Path) -> None:
    """
    Write a page with one collapsible block per suite and one finding per case.

    Parameters
    ----------
    reports : suite reports, shown in the given order
    output_path : Path where the HTML report will be saved
    """
    total = sum(r.summary.total for r in reports)
    passed = sum(r.summary.passed for r in reports)

    html = f"""<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>Verification Report - {passed}/{total} passed</title>
    <style>
        * {{ margin: 0; padding: 0; box-sizing: border-box; }}
        body {{ font-family: -apple-system, BlinkMacSystemFont, 'Segoe UI', sans-serif; background: #f5f5f5; }}
        .header {{ background: #2c3e50; color: white; padding: 20px; }}
        .header h1 {{ font-size: 24px; margin-bottom: 5px; }}
        .header p {{ opacity: 0.85; font-size: 13px; }}
        .suite {{ border-bottom: 1px solid #eee; background: white; }}
        .suite-header {{ padding: 15px; background: #f8f9fa; cursor: pointer; font-weight: 600; }}
        .suite-header:hover {{ background: #e9ecef; }}
        .suite-content {{ display: none; padding: 15px; }}
        .suite.expanded .suite-content {{ display: block; }}
        .case {{ padding: 10px 12px; border-radius: 3px; margin-bottom: 6px; }}
        .case-pass {{ background: #d4edda; border-left: 3px solid #28a745; color: #155724; }}
        .case-fail {{ background: #f8d7da; border-left: 3px solid #dc3545; color: #721c24; }}
        .case-text {{ font-size: 13px; }}
        .case-text strong {{ font-weight: 600; }}
        details pre {{ margin-top: 8px; background: #f8f9fa; padding: 10px; border-radius: 4px; overflow-x: auto; font-size: 12px; }}
    </style>
</head>
<body>
    <div class="header">
        <h1>Verification Report</h1>
        <p>{passed} of {total} cases passed across {len(reports)} suite(s)</p>
    </div>
"""

    for suite_idx, report in enumerate(reports):
        html += f"""
    <div class="suite{' expanded' if not report.all_passed else ''}" id="suite-{suite_idx}">
        <div class="suite-header" onclick="toggleSuite({suite_idx})">
            {'✅' if report.all_passed else '❌'} {report.suite} ({report.summary.passed}/{report.summary.total})
        </div>
        <div class="suite-content">
"""
        for case in report.cases:
            severity_class = "case-pass" if case.passed else "case-fail"
            formatted_insight = markdown.markdown(case_insight(case))
            inputs_json = json.dumps(case.inputs, indent=2, default=str)
            html += f"""
            <div class="case {severity_class}">
                <div class="case-text">{formatted_insight}</div>
                <details><summary>Inputs</summary><pre>{inputs_json}</pre></details>
            </div>
"""
        html += """
        </div>
    </div>
"""

    html += """
    <script>
        function toggleSuite(idx) {
            document.getElementById(`suite-${idx}`).classList.toggle('expanded');
        }
    </script>
</body>
</html>
"""

    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(html)
