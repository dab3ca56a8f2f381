"""
Check reports and their rendering.

Every verification in the package returns a CheckReport rather than raising.
A run collects reports into a RunReport, which is written either as a JSON
document (sorted keys, no timestamps) or as a rich table followed by a
summary rendered from templates/report.txt.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Union

from jinja2 import Environment, FileSystemLoader
from rich.console import Console
from rich.table import Table

from .scalar import CycNumber

logger = logging.getLogger(__name__)

REPORT_VERSION = 1
TEMPLATE = Path(__file__).parent / "templates" / "report.txt"
MAX_WITNESSES = 5

Witness = Union[str, Callable[[], str]]


def exact_value(value: Any) -> Any:
    """JSON form of a value: exact cyclotomic data plus a decimal column"""
    if isinstance(value, CycNumber):
        return {"exact": value.to_json(), "decimal": value.decimal()}
    if isinstance(value, Fraction):
        return {"exact": str(value), "decimal": f"{float(value):.6f}"}
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): exact_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact_value(v) for v in value]
    return str(value)


def short_value(value: Any) -> str:
    if isinstance(value, CycNumber):
        return value.decimal(4) if not value.is_rational() else str(value.rational_value())
    return str(value)


@dataclass
class CheckReport:
    """Outcome of one verified identity family"""

    name: str
    params: dict[str, Any] = field(default_factory=dict)
    checked: int = 0
    failures: int = 0
    witnesses: list[str] = field(default_factory=list)
    values: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.error is None

    def record(self, ok: bool, witness: Witness = "") -> bool:
        """Count one identity; on failure keep a (lazily built) witness"""
        self.checked += 1
        if not ok:
            self.fail(witness)
        return ok

    def fail(self, witness: Witness) -> None:
        self.failures += 1
        if len(self.witnesses) < MAX_WITNESSES:
            text = witness() if callable(witness) else witness
            self.witnesses.append(text)
            if len(self.witnesses) == 1:
                logger.info("%s failed: %s", self.name, text)

    def merge(self, other: "CheckReport") -> "CheckReport":
        self.checked += other.checked
        self.failures += other.failures
        for w in other.witnesses:
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(f"{other.name}: {w}")
        if other.error and not self.error:
            self.error = other.error
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": exact_value(self.params),
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "witnesses": list(self.witnesses),
            "values": exact_value(self.values),
            "error": self.error,
        }


@dataclass
class RunReport:
    command: str
    config: dict[str, Any]
    checks: list[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, report: CheckReport) -> CheckReport:
        self.checks.append(report)
        return report

    def to_dict(self) -> dict[str, Any]:
        return {
            "report_version": REPORT_VERSION,
            "command": self.command,
            "config": exact_value(self.config),
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def write_json(report: RunReport, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.to_json())
    logger.info("report written to %s", path)


def render_text(report: RunReport, console: Console | None = None) -> str:
    """Print the check table and return the rendered summary"""
    console = console or Console()
    table = Table(title=f"hopfg {report.command}")
    table.add_column("check")
    table.add_column("params")
    table.add_column("checked", justify="right")
    table.add_column("result")
    for c in report.checks:
        params = ", ".join(f"{k}={short_value(v)}" for k, v in c.params.items())
        result = "[green]PASS[/green]" if c.passed else "[red]FAIL[/red]"
        if c.passed and c.values.get("vacuous"):
            result = "[yellow]PASS (vacuous)[/yellow]"
        table.add_row(c.name, params, str(c.checked), result)
    console.print(table)

    env = Environment(loader=FileSystemLoader(TEMPLATE.parent), keep_trailing_newline=True)
    template = env.get_template(TEMPLATE.name)
    summary = template.render(
        command=report.command,
        config=report.config,
        checks=report.checks,
        passed=report.passed,
        failed=[c for c in report.checks if not c.passed],
        short_value=short_value,
    )
    console.print(summary, markup=False, highlight=False)
    return summary
