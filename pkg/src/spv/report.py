"""Run reports and their text, JSON and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import __version__
from .exactnum import format_rational

VERDICTS = ("pass", "fail", "pole", "error")


def fmt_exact(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else format_rational(value)


def fmt_float(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return f"{x:.17g}"


@dataclass
class Case:
    case_id: str
    inputs: dict[str, str]
    lhs: Optional[str]
    rhs: Optional[str]
    verdict: str
    detail: str = ""
    numeric: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    def to_dict(self) -> dict:
        d = {
            "id": self.case_id,
            "inputs": self.inputs,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "verdict": self.verdict,
            "detail": self.detail,
        }
        if self.numeric:
            d["numeric"] = self.numeric
        return d


@dataclass
class RunReport:
    command: str
    cases: list[Case]
    notes: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(c.verdict == "pass" for c in self.cases)
        failed = sum(c.verdict == "fail" for c in self.cases)
        return {
            "total": len(self.cases),
            "passed": passed,
            "failed": failed,
            "errored": len(self.cases) - passed - failed,
        }

    def exit_code(self) -> int:
        """0 all pass, 1 any identity failure, 3 poles/errors but no failure."""
        s = self.summary
        if s["failed"]:
            return 1
        if s["errored"]:
            return 3
        return 0

    def to_dict(self) -> dict:
        d = {
            "tool": "spv",
            "version": self.version,
            "command": self.command,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary,
        }
        if self.notes:
            d["notes"] = self.notes
        return d


def render_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


CSV_COLUMNS = ("id", "inputs", "lhs", "rhs", "verdict", "detail", "numeric")


def render_csv(report: RunReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for c in report.cases:
        w.writerow(
            [
                c.case_id,
                ";".join(f"{k}={v}" for k, v in c.inputs.items()),
                c.lhs if c.lhs is not None else "",
                c.rhs if c.rhs is not None else "",
                c.verdict,
                c.detail,
                ";".join(f"{k}={v}" for k, v in c.numeric.items()),
            ]
        )
    return buf.getvalue()


_COLORS = {"pass": "\x1b[32m", "fail": "\x1b[31m", "pole": "\x1b[33m", "error": "\x1b[33m"}
_RESET = "\x1b[0m"


def use_color(stream) -> bool:
    if os.environ.get("SPV_NO_COLOR"):
        return False
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


def render_text(report: RunReport, color: bool = False) -> str:
    lines = [f"spv {report.version}", f"command: {report.command}", ""]
    for c in report.cases:
        verdict = c.verdict.upper()
        if color:
            verdict = f"{_COLORS[c.verdict]}{verdict}{_RESET}"
        lines.append(f"[{verdict}] {c.case_id}")
        if c.lhs is not None:
            lines.append(f"    lhs = {c.lhs}")
        if c.rhs is not None:
            lines.append(f"    rhs = {c.rhs}")
        for k, v in c.numeric.items():
            lines.append(f"    {k} = {v}")
        if c.detail:
            lines.append(f"    {c.detail}")
    s = report.summary
    lines.append("")
    for k, v in report.notes.items():
        lines.append(f"note {k}: {v}")
    lines.append(f"total {s['total']}, passed {s['passed']}, failed {s['failed']}, errored {s['errored']}")
    return "\n".join(lines) + "\n"


def render(report: RunReport, fmt: str, color: bool = False) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    return render_text(report, color)
