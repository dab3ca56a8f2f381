"""
Command-line front end.

    hopfg check --instance sl2 --r 2 --alpha 1/2 --suite all
    hopfg check --json family.json --suite axioms
    hopfg mtrace --r 2 --alpha 1/2 --grade 1/2 --grade=-1/2 --seeds 10 --side both
    hopfg sl2 --r 3 --alpha 1/2 --report full

Exit status: 0 when every check passes, 1 when a check fails, 2 for bad
input or configuration.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from .config import CONFIG_FILE, SIDES, SUITES, RunConfig, load_config
from .errors import HopfGError, InputError, WindowIncomplete
from .group_algebra import GroupAlgebraFamily
from .hopf_core import Grade, HopfGFamily, check_all_axioms
from .integrals import GIntegral, comodulus, integral_suite
from .linalg import Matrix
from .modcat import (
    check_decomposition,
    check_duality,
    check_integral_transport,
    check_module,
    check_partial_trace_paths,
    check_pivotal_structure,
    tensor_module,
)
from .mtrace import (
    check_cyclicity,
    check_nondegenerate_pairing,
    check_reduction_lemma,
    check_reduction_negative_control,
    check_semisimple_proportionality,
    check_sides_agree,
    check_trace_integral_correspondence,
    check_trace_roundtrip,
    check_trivial_factor,
)
from .report import CheckReport, RunReport, render_text, write_json
from .schema import load_family
from . import uqsl2

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


# ============================================================================
# Families and grades
# ============================================================================

def build_family(config: RunConfig) -> HopfGFamily:
    if config.instance == "json":
        return load_family(Path(config.json_path))
    if config.instance == "group":
        return GroupAlgebraFamily(n=config.group_order)
    extra = [Fraction(g) for pair in config.grade_pairs for g in pair]
    return uqsl2.UqSl2Family(config.r, config.alpha_value, extra, config.pivot_twist)


def parse_grade(F: HopfGFamily, text: str) -> Grade:
    try:
        a = F.group.parse(text)
    except (ValueError, KeyError) as e:
        raise WindowIncomplete([text]) from e
    F.require(a)
    return a


def grade_pairs(F: HopfGFamily, config: RunConfig) -> list[tuple[Grade, Grade]]:
    if config.grade_pairs:
        return [(parse_grade(F, a), parse_grade(F, b)) for a, b in config.grade_pairs]
    if isinstance(F, uqsl2.UqSl2Family):
        alpha = F.grade(config.alpha_value)
        return [(alpha, alpha), (alpha, F.inv(alpha)), (alpha, F.grade(1))]
    return [(a, b) for a in F.window for b in F.window if F.in_window(F.mul(a, b))]


def axiom_grades(F: HopfGFamily, config: RunConfig) -> Optional[list[Grade]]:
    """Whole window, except for uqsl2 where 1, alpha and alpha^-1 are enough"""
    if isinstance(F, uqsl2.UqSl2Family):
        alpha = F.grade(config.alpha_value)
        return list(dict.fromkeys((F.unit_grade, alpha, F.inv(alpha))))
    return None


# ============================================================================
# Suites
# ============================================================================

class SuiteRunner:
    """Runs suites into one RunReport; a HopfGError inside a check becomes a failed check"""

    def __init__(self, F: HopfGFamily, config: RunConfig, report: RunReport):
        self.F = F
        self.config = config
        self.report = report
        self._integrals: Optional[dict[str, GIntegral]] = None

    def guard(self, name: str, build: Callable[[], object]) -> None:
        try:
            result = build()
        except InputError:
            raise
        except HopfGError as e:
            logger.info("%s raised %s", name, e)
            self.report.add(CheckReport(name, error=f"{type(e).__name__}: {e}"))
            return
        for r in result if isinstance(result, list) else [result]:
            self.report.add(r)

    @property
    def integrals(self) -> dict[str, GIntegral]:
        if self._integrals is None:
            reports, self._integrals = integral_suite(self.F)
            self._integral_reports = reports
        return self._integrals

    def axioms(self) -> None:
        self.guard("axioms", lambda: check_all_axioms(self.F, axiom_grades(self.F, self.config)))

    def integral_checks(self) -> None:
        F = self.F

        def run():
            ints = self.integrals
            reports = list(self._integral_reports)
            if isinstance(F, uqsl2.UqSl2Family):
                reports.append(uqsl2.check_integral_formula(
                    F, ints["right"].forms, ints["symmetrised"].forms))
                if not F.pivot_twist:
                    reports.append(uqsl2.check_unibalanced_closed_form(F, comodulus(F, ints["right"])))
            return reports

        self.guard("integrals", run)

    def sides(self) -> list[str]:
        return ["right", "left"] if self.config.side == "both" else [self.config.side]

    def mtrace(self) -> None:
        F, config = self.F, self.config
        seeds = config.seed_list()
        self.guard("integrals", lambda: self.integrals and [])
        if self._integrals is None:
            return
        ints = self.integrals
        sym = {"right": ints["symmetrised"], "left": ints["symmetrised_left"]}
        pairs = grade_pairs(F, config)
        for a, b in pairs:
            for side in self.sides():
                self.guard("decomposition", lambda a=a, b=b, side=side: check_decomposition(F, a, b, side))
                self.guard("reduction", lambda a=a, b=b, side=side: check_reduction_lemma(
                    F, sym[side], a, b, seeds, exhaustive=config.exhaustive))
                if isinstance(F, uqsl2.UqSl2Family):
                    self.guard("negative_control", lambda a=a, b=b, side=side: check_reduction_negative_control(
                        F, a, b, seeds, side))
            self.guard("integral_transport", lambda a=a, b=b: check_integral_transport(
                F, sym["right"], sym["left"], a, b))
            self.guard("trivial_factor", lambda a=a, b=b: check_trivial_factor(F, sym["right"], a, b, seeds[:3]))
        for a in dict.fromkeys(a for a, _ in pairs):
            self.guard("cyclicity", lambda a=a: check_cyclicity(F, sym["right"], a, seeds))
            self.guard("trace_pairing", lambda a=a: check_nondegenerate_pairing(F, sym["right"], a))
            self.guard("correspondence", lambda a=a: check_trace_integral_correspondence(F, sym["right"], a))
            for side in self.sides():
                self.guard("roundtrip", lambda a=a, side=side: check_trace_roundtrip(F, sym[side], a))
                if self._semisimple(a):
                    self.guard("proportionality", lambda a=a, side=side: check_semisimple_proportionality(
                        F, sym[side], a, seeds[:5] or [0], side))
        self.guard("right_equals_left", lambda: check_sides_agree(F, sym["right"], sym["left"]))

    def _semisimple(self, a: Grade) -> bool:
        if isinstance(self.F, GroupAlgebraFamily):
            return True
        if isinstance(self.F, uqsl2.UqSl2Family):
            return Fraction(a).denominator != 1
        return False

    def sl2_full(self) -> None:
        F = self.F
        if not isinstance(F, uqsl2.UqSl2Family):
            raise InputError("the sl2-full suite needs the sl2 instance")
        alpha = self.config.alpha_value
        r = F.r
        g = uqsl2.module_grade(F, alpha)
        self.guard("integrals", lambda: self.integrals and [])
        if self._integrals is None:
            return
        sym = self.integrals["symmetrised"].forms
        self.guard("relations", lambda: [uqsl2.check_relations(F, a) for a in dict.fromkeys((F.unit_grade, F.grade(alpha), g))])
        self.guard("casimir_powers", lambda: uqsl2.casimir_power_identities(F, sym[g], g))
        for k in range(r):
            self.guard("simple_module", lambda k=k: uqsl2.check_simple_module(F, alpha + 2 * k))

        def module_checks():
            V = uqsl2.simple_module(F, alpha)
            report = check_module(V)
            report.values["quantum_dimension"] = uqsl2.quantum_dimension(V)
            VV = tensor_module(V, V)
            f = VV.act(F.E(VV.grade).vec) + Matrix.identity(VV.dim, F.N)
            paths = [check_partial_trace_paths(f, V.dim, V, side) for side in ("right", "left")]
            return [report, check_duality(V), check_pivotal_structure(V), *paths]

        self.guard("module_structure", module_checks)
        self.guard("density", lambda: uqsl2.density_decomposition_check(F, alpha))
        self.guard("casimir_projector", lambda: uqsl2.check_casimir_projector(F, alpha))
        self.guard("modified_dimension", lambda: uqsl2.check_modified_dimension(F, sym[g], alpha))

    def run(self, suite: str) -> None:
        if suite in ("axioms", "all"):
            self.axioms()
        if suite in ("integrals", "all"):
            self.integral_checks()
        if suite in ("mtrace", "all"):
            self.mtrace()
        if suite == "sl2-full" or (suite == "all" and isinstance(self.F, uqsl2.UqSl2Family)):
            self.sl2_full()


def run(config: RunConfig, command: str = "check") -> tuple[int, Optional[RunReport]]:
    """Execute config.suite; returns the exit status and the report (None on input errors)"""
    try:
        F = build_family(config)
        report = RunReport(command, config.to_dict())
        logger.debug("running %s on %r", config.suite, F)
        SuiteRunner(F, config, report).run(config.suite)
    except InputError as e:
        logger.error("%s", e)
        return EXIT_INPUT, None
    except WindowIncomplete as e:
        logger.error("%s", e)
        return EXIT_INPUT, None
    except ValueError as e:
        logger.error("bad parameter: %s", e)
        return EXIT_INPUT, None
    return (EXIT_OK if report.passed else EXIT_FAILED), report


# ============================================================================
# Argument parsing
# ============================================================================

def _instance_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--instance", choices=("sl2", "group"), help="Built-in family (default from config)")
    source.add_argument("--json", dest="json_path", metavar="PATH", help="Load the family from a JSON file")
    parser.add_argument("--r", type=int, help="Root of unity order for sl2 (q = exp(i pi / r))")
    parser.add_argument("--alpha", help="Grade alpha as a rational, e.g. 1/2")
    parser.add_argument("--twist", dest="pivot_twist", type=int, help="Twist the sl2 pivot by exp(i pi m a)")
    parser.add_argument("--order", dest="group_order", type=int, help="n for the group algebra k[Z/n]")


def _common_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=CONFIG_FILE, help=f"Configuration file (default: {CONFIG_FILE})")
    parser.add_argument("--seeds", type=int, help="Number of seeded random samples")
    parser.add_argument("--output", "-o", help="'text', '-' for JSON on stdout, or a JSON report path")
    parser.add_argument("--verbose", "-v", action="count", default=0, help="-v for INFO, -vv for DEBUG")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfg",
        description="Exact checks for pivotal Hopf G-coalgebras and modified traces",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  hopfg check --instance sl2 --r 2 --alpha 1/2 --suite all
  hopfg check --json family.json --suite axioms
  hopfg mtrace --r 2 --alpha 1/2 --grade 1/2 --grade=-1/2 --side both
  hopfg sl2 --r 3 --alpha 1/2 --report full -o report.json

Exit status: 0 all checks pass, 1 a check failed, 2 bad input.
HOPFG_SEED overrides the base seed.
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Run a check suite")
    _instance_args(check)
    check.add_argument("--suite", choices=SUITES, help="Which checks to run")
    check.add_argument("--side", choices=SIDES, help="Handedness of the trace checks")
    check.add_argument("--exhaustive", action="store_true", default=None, help="Also run the spanning set of endomorphisms")
    _common_args(check)

    mtrace = sub.add_parser("mtrace", help="Modified-trace checks on one grade pair")
    _instance_args(mtrace)
    mtrace.add_argument("--grade", action="append", default=[], help="Grade of a factor; give exactly two (write negatives as --grade=-1/2)")
    mtrace.add_argument("--side", choices=SIDES, help="Handedness of the trace checks")
    mtrace.add_argument("--exhaustive", action="store_true", default=None, help="Also run the spanning set of endomorphisms")
    _common_args(mtrace)

    sl2 = sub.add_parser("sl2", help="The quantum sl(2) suite")
    sl2.add_argument("--r", type=int, help="Root of unity order")
    sl2.add_argument("--alpha", help="Weight alpha (not an integer)")
    sl2.add_argument("--report", choices=("summary", "full"), default="summary", help="full adds the axiom and trace suites")
    _common_args(sl2)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    overrides = {
        "r": getattr(args, "r", None),
        "alpha": getattr(args, "alpha", None),
        "pivot_twist": getattr(args, "pivot_twist", None),
        "group_order": getattr(args, "group_order", None),
        "seeds": args.seeds,
        "side": getattr(args, "side", None),
        "exhaustive": getattr(args, "exhaustive", None),
        "output": args.output,
    }
    if getattr(args, "json_path", None):
        overrides["instance"] = "json"
        overrides["json_path"] = args.json_path
    elif getattr(args, "instance", None):
        overrides["instance"] = args.instance
    if args.command == "check":
        overrides["suite"] = args.suite
    elif args.command == "mtrace":
        overrides["suite"] = "mtrace"
        if args.grade:
            if len(args.grade) != 2:
                raise InputError("mtrace needs exactly two --grade values")
            overrides["grade_pairs"] = [list(args.grade)]
    else:
        overrides["instance"] = "sl2"
        overrides["suite"] = "all" if args.report == "full" else "sl2-full"
    return load_config(args.config, overrides)


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        config = config_from_args(args)
    except InputError as e:
        logger.error("%s", e)
        return EXIT_INPUT
    status, report = run(config, args.command)
    if report is None:
        return status
    if config.output == "text":
        render_text(report)
    elif config.output == "-":
        sys.stdout.write(report.to_json())
    else:
        write_json(report, Path(config.output))
    return status


if __name__ == "__main__":
    sys.exit(main())
