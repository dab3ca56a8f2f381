from __future__ import annotations

import io
import json
from pathlib import Path

import pytest
from rich.console import Console

from hopfg.cli import EXIT_FAILED, EXIT_INPUT, EXIT_OK, main, make_parser
from hopfg.group_algebra import GroupAlgebraFamily
from hopfg.report import CheckReport, RunReport, render_text
from hopfg.schema import dump_family


def _run(tmp_path: Path, *argv: str) -> int:
    return main([*argv, "--config", str(tmp_path / "config.json")])


def test_group_instance_writes_a_passing_report(tmp_path: Path) -> None:
    out = tmp_path / "reports" / "group.json"
    status = _run(tmp_path, "check", "--instance", "group", "--order", "3", "--seeds", "3", "-o", str(out))
    assert status == EXIT_OK
    report = json.loads(out.read_text())
    assert report["passed"] is True
    assert report["command"] == "check"
    assert report["config"]["group_order"] == 3
    names = {c["name"] for c in report["checks"]}
    assert {"hopf", "unibalanced", "reduction_right", "reduction_left", "right_equals_left"} <= names


def test_json_instance(tmp_path: Path) -> None:
    family = tmp_path / "family.json"
    dump_family(GroupAlgebraFamily(n=2, grading_order=2), family)
    out = tmp_path / "report.json"
    status = _run(tmp_path, "check", "--json", str(family), "--suite", "axioms", "-o", str(out))
    assert status == EXIT_OK
    assert json.loads(out.read_text())["config"]["instance"] == "json"


def test_text_output(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(tmp_path, "check", "--instance", "group", "--suite", "integrals") == EXIT_OK
    assert "PASS" in capsys.readouterr().out


def test_json_on_stdout_is_reproducible(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = ("check", "--instance", "sl2", "--suite", "integrals", "-o", "-")
    assert _run(tmp_path, *argv) == EXIT_OK
    first = capsys.readouterr().out
    assert _run(tmp_path, *argv) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["passed"] is True


def test_twisted_pivot_fails_the_integral_suite(tmp_path: Path) -> None:
    out = tmp_path / "twisted.json"
    status = _run(tmp_path, "check", "--instance", "sl2", "--twist", "1", "--suite", "integrals", "-o", str(out))
    assert status == EXIT_FAILED
    failed = {c["name"] for c in json.loads(out.read_text())["checks"] if not c["passed"]}
    assert "unibalanced" in failed


@pytest.mark.parametrize(
    "argv",
    [
        ("check", "--alpha", "x"),
        ("check", "--r", "1"),
        ("mtrace", "--grade", "1/2"),
        ("mtrace", "--instance", "group", "--grade", "g5", "--grade", "g0"),
        ("check", "--json", "no-such-file.json"),
    ],
)
def test_bad_input_exits_with_two(tmp_path: Path, argv: tuple[str, ...]) -> None:
    assert _run(tmp_path, *argv) == EXIT_INPUT


def test_negative_grades_need_the_equals_form() -> None:
    args = make_parser().parse_args(["mtrace", "--grade", "1/2", "--grade=-1/2"])
    assert args.grade == ["1/2", "-1/2"]


@pytest.mark.slow
def test_sl2_summary(tmp_path: Path) -> None:
    out = tmp_path / "sl2.json"
    assert _run(tmp_path, "sl2", "--r", "2", "--alpha", "1/2", "-o", str(out)) == EXIT_OK
    report = json.loads(out.read_text())
    assert report["config"]["suite"] == "sl2-full"
    names = [c["name"] for c in report["checks"]]
    assert "modified_dimension" in names
    assert "density" in names


def test_vacuous_checks_are_marked_in_the_table() -> None:
    report = RunReport("mtrace", {})
    report.add(CheckReport("semisimple_proportionality", checked=5, values={"constant": 0, "vacuous": True}))
    report.add(CheckReport("roundtrip", checked=1))
    out = io.StringIO()
    render_text(report, Console(file=out, width=160))
    text = out.getvalue()
    assert "PASS (vacuous)" in text
    assert text.count("PASS") == 2
