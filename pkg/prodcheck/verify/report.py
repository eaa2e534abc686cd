"""Plain-text renderings of verdict lists and dimension reports."""
from typing import Iterable, Sequence

from ..models.catalog_model import DimensionCheck, DimensionReport, Verdict, VerdictStatus
from ..models.cli_model import OutputMode
from ..models.helper import format_rational
from .runner import totals


def status_text(v: Verdict) -> str:
    if v.status is VerdictStatus.failed and v.expected_failure:
        return "fail (expected)"
    return v.status.value


def format_verdicts(verdicts: Sequence[Verdict], output: OutputMode = OutputMode.human) -> list[str]:
    passed, total = totals(verdicts)
    if OutputMode(output) is OutputMode.tsv:
        lines = [f"{v.id}\t{status_text(v)}\t{v.detail}" for v in verdicts]
    else:
        lines, suite = [], None
        for v in verdicts:
            if v.suite != suite:
                suite = v.suite
                lines.append(f"[{suite}]")
            lines.append(f"  {status_text(v):<16} {v.id}" + (f"  {v.detail}" if v.detail else ""))
    lines.append(f"TOTAL {passed}/{total}")
    return lines


def _check_line(c: DimensionCheck) -> str:
    verdict = "OK" if c.ok else "FAIL"
    if c.formula:
        return f"{c.quantity}={format_rational(c.computed)}  {c.formula}={format_rational(c.expected)} {verdict}"
    return f"{c.quantity}={format_rational(c.computed)} {verdict}"


def format_dimension(report: DimensionReport, indent: str = "") -> list[str]:
    polynomial_ok = "OK" if report.polynomial_value == 0 else "FAIL"
    lines = [f"{indent}d={format_rational(report.d)}  {report.polynomial}="
             f"{format_rational(report.polynomial_value)} {polynomial_ok}"]
    for check in report.checks:
        if check.quantity == report.polynomial:
            continue
        lines.append(indent + _check_line(check))
    if report.associative is not None:
        lines.append(f"{indent}associative={'yes' if report.associative else 'no'}")
    if report.vector_part is not None:
        lines.append(f"{indent}vector part {report.vector_part.model}:")
        lines += format_dimension(report.vector_part, indent + "  ")
    return lines


def render(lines: Iterable[str]) -> str:
    return "\n".join(lines) + "\n"
