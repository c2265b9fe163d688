"""
Text Report

Plain-text rendering of run reports for `--format text`.
"""

from typing import List

from shared.schemas.reports import DimensionTable, Report, RunReport


def render_report(report: Report) -> List[str]:
    lines = [report.summary()]
    for v in report.violations:
        witness = ", ".join(v.witness)
        lines.append(f"  ✗ {v.axiom} at [{witness}]")
        if v.lhs is not None or v.rhs is not None:
            lines.append(f"      {v.lhs}  ≠  {v.rhs}")
    if report.suppressed:
        lines.append(f"  ... {report.suppressed} more violations not shown")
    for key, value in sorted(report.notes.items()):
        lines.append(f"  {key}: {value}")
    return lines


def render_dimensions(table: DimensionTable) -> List[str]:
    degrees = sorted(table.host_dims)
    header = "degree      " + " ".join(f"{d:>5}" for d in degrees)

    def row(name: str, values) -> str:
        return f"{name:<12}" + " ".join(f"{values.get(d, '-'):>5}" for d in degrees)

    lines = [f"dimensions of {table.subject} (bound {table.bound})", header,
             row("host", table.host_dims), row("ker φ", table.kernel_dims),
             row("φ(H)", table.numerator_dims), row("fractions", table.fraction_dims)]
    for b, values in sorted(table.stabilization.items()):
        lines.append(row(f"  |w| ≤ {b}", values))
    lines.append(f"stabilized: {'yes' if table.stabilized else 'no'}")
    return lines


def render_run(run: RunReport) -> str:
    title = f"{run.tool} {run.version} {run.command}"
    if run.example:
        title += f" {run.example}"
    lines = [title]
    if run.parameters:
        lines.append("parameters: " + ", ".join(f"{k}={v}" for k, v in sorted(run.parameters.items())))
    if run.strategy:
        lines.append(f"strategy: {run.strategy}")
    for report in run.reports:
        lines.extend(render_report(report))
    if run.dimensions is not None:
        lines.extend(render_dimensions(run.dimensions))
    for key, value in sorted(run.results.items()):
        lines.append(f"{key}: {value}")
    if run.reports:
        lines.append("PASS" if run.passed else "FAIL")
    return "\n".join(lines) + "\n"
