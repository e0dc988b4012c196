#!/usr/bin/env python3
"""
cuntzlab Command-Line Interface

One entry point for every computation in the library: structure-file
validation, tau, axiom scans, hom and bivariant semigroups, composition and
evaluation, tensor products and the universal-property falsifier, the
structural checks and the worked-example registry.

ARCHITECTURE NOTE:
This is Layer 3 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation
    Layer 2: Calculator Classes - Exact algebra
    Layer 3: CLI Interface (THIS FILE) - Command-line front end

USAGE:
    cuntzlab validate strict3.json
    cuntzlab tau strict3.json                    # {0}
    cuntzlab axioms homE2E3.json --check o5      # exit 2, witness (2,2,0,0,3)
    cuntzlab bivariant --catalog E2 E3           # {0,2,3,inf}
    cuntzlab compose "Pbar->Pbar:soft(2)" "Pbar->Pbar:soft(3)"
    cuntzlab tensor "R{2}" "R{3}"
    cuntzlab repro --all --json

EXIT CODES:
    0    success
    1    input or validation failure (bad file, unknown name, refused bound)
    2    a check found a violation
    3    usage error, or a request outside the closed-form tables
    130  interrupted

Carrier arguments are catalog names ("E3", "Pbar", "R{2,3}", "Nbar^2",
"{0}"), structure files ("strict3.json", also found among the bundled
files) or direct sums of finite ones ("E0+E0").

Author: cuntzlab Development Team
Created: 2026-10-17
"""

import argparse
import sys
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel, ValidationError

# Add project root to path for imports
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.bivariant import bivariant, compose, evaluate, hom_monoid_finite, parse_element
from src.algebra.bivariant_checks import adjunction_check, solid_status
from src.algebra.catalog import catalog, finite_carrier, split_top_level
from src.algebra.core_order import Carrier, check_o5, check_o6, validate_structure
from src.algebra.errors import (
    BoundExceededError,
    CuntzLabError,
    NoClosedFormError,
    PreconditionError,
    StructureError,
    UnsupportedOperationError,
)
from src.algebra.finite_q import (
    FiniteQSemigroup,
    coreflection_check,
    direct_sum,
    enumerate_ideals,
    ideal_from_labels,
    quotient_summary,
    tau_summary,
    trivial,
)
from src.algebra.paths import compare_report, parse_path
from src.algebra.repro import run_repro
from src.algebra.semiring_facts import catalog_listing, describe_carrier
from src.algebra.tensor import (
    TRIVIAL_NAME,
    omega_table,
    tensor_catalog,
    universal_property_falsify,
)
from src.config import CuntzLabConfig
from src.models.bivariant_inputs import OperationResult
from src.models.finite_inputs import IdealListing
from src.models.settings_inputs import LabSettings
from src.models.structure_inputs import AxiomScanReport
from src.models.tensor_inputs import TensorQuery
from src.utils.structure_io import dump_structure, load_bimorphism, load_semigroup, load_structure, save_structure

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 3
EXIT_INTERRUPTED = 130

BANNER = "=" * 70
RULE = "-" * 70


class UsageError(Exception):
    """Raised by the argument parser instead of exiting with status 2."""


class CuntzLabArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Outcome:
    """What a command produced: the report, its human rendering and the exit code."""

    report: BaseModel
    human: str
    code: int = EXIT_OK
    # replaces the report when --save-to is given (tau writes a structure file)
    save_text: str | None = None


# ---------------------------------------------------------------------------
# Argument resolution
# ---------------------------------------------------------------------------


def resolve_carrier(token: str) -> Carrier:
    """
    A catalog name, a structure file, "{0}" or a sum "A+B" of finite carriers.

    Raises:
        PreconditionError: Unknown catalog name or an infinite summand
        StructureError: Missing or malformed file
    """
    token = token.strip()
    if token == TRIVIAL_NAME:
        return trivial()
    parts = [part.strip() for part in token.split("+")]
    if len(parts) > 1:
        summands = [finite_carrier(resolve_carrier(part)) for part in parts]
        result = summands[0]
        for summand in summands[1:]:
            result = direct_sum(result, summand)
        return result
    if token.endswith(".json"):
        return load_semigroup(token)
    return catalog(token)


def resolve_finite(token: str) -> FiniteQSemigroup:
    return finite_carrier(resolve_carrier(token))


def _witness(labels: list[str]) -> str:
    return "(" + ",".join(labels) + ")"


def _header(title: str) -> list[str]:
    return [BANNER, title, BANNER]


def _status(message: str) -> None:
    print(message, file=sys.stderr)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_validate(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    structure = load_structure(args.file)
    _status(f"🔍 Checking pom and auxiliary-relation laws of {structure.name}...")
    report = validate_structure(structure)
    lines = _header(f"🧮 VALIDATE: {structure.name} ({len(structure.elements)} elements)")
    for family in (report.pom, report.aux):
        lines.append(f"{family.checked.upper()} LAWS")
        lines.append(RULE)
        if family.is_valid:
            lines.append("  ✅ all laws hold")
        for violation in family.violations:
            lines.append(f"  ❌ {violation.law}: {violation.description} at {_witness(violation.witness)}")
        lines.append("")
    lines.append(f"Finite Cu-semigroup (aux = leq): {'yes' if report.is_cu else 'no'}")
    return Outcome(report, "\n".join(lines), EXIT_OK if report.passed else EXIT_VIOLATION)


def cmd_tau(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    s = resolve_finite(args.file)
    summary = tau_summary(s)
    labels = summary.structure.elements
    lines = _header(f"🧮 TAU: {s.name}")
    lines.append("{" + ",".join(labels) + "}")
    lines.append("")
    lines.append("Endpoint map")
    lines.append(RULE)
    lines.extend(f"  {label} -> {image}" for label, image in summary.endpoint.items())
    if not summary.endpoint_surjective:
        lines.append("")
        lines.append("⚠️  The endpoint map is not surjective")
    return Outcome(summary, "\n".join(lines), save_text=dump_structure(summary.structure))


def cmd_axioms(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    s = resolve_finite(args.file)
    checks: dict[str, Callable] = {"o5": check_o5, "o6": check_o6}
    requested = [name.strip().lower() for name in args.check.split(",") if name.strip()]
    unknown = [name for name in requested if name not in checks]
    if unknown or not requested:
        raise UsageError(f"--check takes o5, o6 or o5,o6; got {args.check!r}")
    reports = []
    for name in requested:
        _status(f"🔍 Scanning {name.upper()} on {s.name} ({s.size} elements)...")
        reports.append(checks[name](s, settings))
    scan = AxiomScanReport(subject=s.name, reports=reports)
    lines = _header(f"🧮 AXIOMS: {s.name}")
    for report in reports:
        if report.holds:
            lines.append(f"  ✅ {report.axiom} holds")
            continue
        shape = "(a',a,b',b,c)" if report.axiom == "O5" else "(a',a,b,c)"
        lines.append(f"  ❌ {report.axiom} fails: {len(report.violations)} violations")
        lines.append(f"     first witness {shape} = {_witness(report.violations[0].witness)}")
    return Outcome(scan, "\n".join(lines), EXIT_OK if scan.holds else EXIT_VIOLATION)


def cmd_hom(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    s, t = resolve_carrier(args.source), resolve_carrier(args.target)
    _status(f"🔍 Enumerating generalized Cu-morphisms {s.name} -> {t.name}...")
    hom = hom_monoid_finite(s, t, settings)
    summary = hom.summary()
    lines = _header(f"🧮 Cu[{summary.source},{summary.target}]: {summary.count} morphisms")
    lines.append(f"Generators of {summary.source}: {', '.join(summary.generators) or '(none)'}")
    lines.append(RULE)
    for label, table in zip(summary.labels, summary.morphisms):
        lines.append(f"  {label:>10}  " + ", ".join(f"{a}->{v}" for a, v in table.items()))
    if not args.bivariant:
        return Outcome(summary, "\n".join(lines))
    space = bivariant(s, t, settings).summary()
    lines.append("")
    lines.append(f"[[{space.source},{space.target}]] = {space.display()}")
    return Outcome(space, "\n".join(lines))


def cmd_bivariant(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    resolve = catalog if args.catalog else resolve_carrier
    s, t = resolve(args.source), resolve(args.target)
    _status(f"🔍 Computing [[{s.name},{t.name}]]...")
    summary = bivariant(s, t, settings).summary()
    lines = _header(f"🧮 BIVARIANT: [[{summary.source},{summary.target}]] ({summary.kind.value})")
    lines.append(summary.display())
    if summary.citation:
        lines.append("")
        lines.append(f"💡 {summary.citation}")
    return Outcome(summary, "\n".join(lines))


def cmd_compose(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    y = parse_element(args.left, resolve_carrier)
    x = parse_element(args.right, resolve_carrier)
    result = compose(y, x, settings)
    report = OperationResult(
        operation="compose", inputs=[y.format(), x.format()], result=result.format(), space=result.space.name
    )
    lines = _header("🧮 COMPOSE")
    lines.append(f"{y.format()}  o  {x.format()}")
    lines.append(f"= {result.format()}")
    return Outcome(report, "\n".join(lines))


def cmd_evaluate(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    x = parse_element(args.element, resolve_carrier)
    value = evaluate(x, args.point)
    image = x.space.target.format(value)
    report = OperationResult(
        operation="evaluate", inputs=[x.format(), args.point], result=image, space=x.space.target.name
    )
    lines = _header("🧮 EVALUATE")
    lines.append(f"sigma({x.format()})({args.point}) = {image}")
    return Outcome(report, "\n".join(lines))


def cmd_tensor(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    if args.falsify:
        bimorphism = load_bimorphism(args.falsify)
        s, t, p = (FiniteQSemigroup.from_structure(part) for part in (bimorphism.left, bimorphism.right, bimorphism.target))
        table = bimorphism.table
    elif args.falsify_canonical:
        if len(args.factors) != 2:
            raise UsageError("--falsify-canonical takes exactly two factors")
        s, t = resolve_carrier(args.factors[0]), resolve_carrier(args.factors[1])
        p, omega = omega_table(s, t)
        table = [list(row) for row in omega]
    else:
        if len(args.factors) < 2:
            raise UsageError("tensor needs at least two factors (or --falsify FILE)")
        resolution = tensor_catalog(TensorQuery(factors=args.factors))
        lines = _header(f"🧮 TENSOR: {' (x) '.join(resolution.factors)} = {resolution.result}")
        lines.append(f"Normal form: {' (x) '.join(resolution.normal_form) or 'Nbar'}")
        lines.append("")
        lines.append("Rules applied")
        lines.append(RULE)
        lines.extend(f"  {rule}" for rule in resolution.rules)
        if resolution.simple_tensor:
            lines.append("")
            lines.append(f"💡 s (x) t = {resolution.simple_tensor}")
        return Outcome(resolution, "\n".join(lines))

    bound = args.bound or settings.falsifier_bound
    _status(f"🔍 Testing the universal property of ({p.name}, omega) against every Cu-semigroup with <= {bound} elements...")
    report = universal_property_falsify(s, t, p, table, bound=bound, settings=settings)
    lines = _header(f"🧮 FALSIFIER: {s.name} x {t.name} -> {p.name}")
    lines.append(f"Test objects: {report.test_objects}")
    lines.append(f"Bimorphisms checked: {report.bimorphisms_checked}")
    lines.append("")
    if report.violation is None:
        lines.append(f"✅ {report.verdict()}")
        return Outcome(report, "\n".join(lines))
    violation = report.violation
    lines.append(f"❌ {report.verdict()}")
    lines.append(f"   test object: {violation.test_object.name} {{{','.join(violation.test_object.elements)}}}")
    lines.append(f"   phi: {violation.phi}")
    if violation.alphas:
        lines.append(f"   alphas: {violation.alphas}")
    lines.append(f"   {violation.message}")
    return Outcome(report, "\n".join(lines), EXIT_VIOLATION)


def cmd_adjunction(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    s, t, p = (resolve_carrier(token) for token in (args.source, args.middle, args.target))
    _status(f"🔍 Comparing Cu({s.name},[[{t.name},{p.name}]]) with CuBimor({s.name} x {t.name}, {p.name})...")
    report = adjunction_check(s, t, p, settings)
    lines = _header(f"🧮 ADJUNCTION: {s.name}, {t.name}, {p.name}")
    lines.append(f"|Cu(S,[[T,P]])|      = {report.hom_side_count}")
    lines.append(f"|CuBimor(S x T, P)|  = {report.bimorphism_count}")
    if report.tensor_side_count is not None:
        lines.append(f"|Cu(S (x) T, P)|     = {report.tensor_side_count}")
    lines.append("")
    lines.append(f"{'✅' if report.bijective else '❌'} bijective")
    lines.append(f"{'✅' if report.order_isomorphism else '❌'} order-isomorphism")
    if report.tensor_leg_checked:
        lines.append(f"{'✅' if report.tensor_leg_holds else '❌'} factors through the tensor product")
    if report.failure:
        lines.append(f"   witness: {_witness(report.failure)}")
    return Outcome(report, "\n".join(lines), EXIT_OK if report.passed else EXIT_VIOLATION)


def cmd_solid(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    _status(f"🔍 Checking the solidness statuses of {args.name}...")
    report = solid_status(args.name, settings)
    lines = _header(f"🧮 SOLIDNESS: {report.name}")
    for number, value in report.statuses.items():
        mark = "unknown" if value is None else ("yes" if value else "no")
        lines.append(f"  ({number}) {mark}")
    lines.append("")
    lines.append("Spot checks")
    lines.append(RULE)
    for check in report.spot_checks:
        detail = f" ({check.detail})" if check.detail else ""
        lines.append(f"  {'✅' if check.passed else '❌'} {check.name}{detail}")
    return Outcome(report, "\n".join(lines), EXIT_OK if report.passed else EXIT_VIOLATION)


def cmd_catalog(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    if args.action == "list":
        listing = catalog_listing()
        lines = _header("📚 CATALOG")
        lines.extend(f"  {entry.name:<10} {entry.description}" for entry in listing.entries)
        return Outcome(listing, "\n".join(lines))

    if not args.name:
        raise UsageError("catalog show needs a NAME")
    entry = describe_carrier(args.name, seed=settings.sample_seed)
    if args.export:
        if not entry.finite:
            raise PreconditionError(f"{entry.name} is infinite; only finite carriers can be exported")
        path = save_structure(finite_carrier(catalog(args.name)), args.export)
        _status(f"💾 Exported {entry.name} to {path}")
    lines = _header(f"📚 {entry.name}: {entry.description}")
    lines.append(f"Finite: {'yes' if entry.finite else 'no'}")
    lines.append(f"Product: {'yes, unit ' + str(entry.unit) if entry.has_product else 'no'}")
    if entry.elements is not None:
        lines.append("Elements: {" + ",".join(entry.elements) + "}")
    if entry.sample is not None:
        lines.append("Sample: " + ", ".join(entry.sample))
    if entry.facts is not None and entry.facts.char_solid:
        statuses = ", ".join(f"({n}) {entry.facts.status(n)}" for n in range(1, 6))
        lines.append(f"Solidness statuses: {statuses}")
    return Outcome(entry, "\n".join(lines))


def cmd_repro(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    if not args.all and not args.case_id:
        raise UsageError("repro needs a case ID or --all")
    report = run_repro(None if args.all else args.case_id, settings)
    lines = _header("🧪 WORKED EXAMPLES")
    for result in report.results:
        lines.append(f"{'✅' if result.passed else '❌'} {result.id}: {result.description}")
        lines.append(f"   [{result.provenance.value}] {result.citation}")
        if not result.passed:
            lines.append(f"   expected: {result.expected}")
            lines.append(f"   actual:   {result.error or result.actual}")
    lines.append("")
    lines.append(f"{len(report.results) - len(report.failures())}/{len(report.results)} cases pass")
    return Outcome(report, "\n".join(lines), EXIT_OK if report.passed else EXIT_VIOLATION)


def cmd_ideals(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    s = resolve_finite(args.file)
    listing = IdealListing(source=s.name, ideals=[ideal.summary(s) for ideal in enumerate_ideals(s)])
    lines = _header(f"🧮 IDEALS: {s.name} ({len(listing.ideals)})")
    lines.extend(f"  z_J = {ideal.top:<8} J = {{{','.join(ideal.members)}}}" for ideal in listing.ideals)
    return Outcome(listing, "\n".join(lines))


def cmd_quotient(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    s = resolve_finite(args.file)
    ideal = ideal_from_labels(s, [label for label in split_top_level(args.ideal) if label])
    summary = quotient_summary(s, ideal)
    lines = _header(f"🧮 QUOTIENT: {s.name} / {{{','.join(summary.ideal.members)}}}")
    lines.append("{" + ",".join(summary.structure.elements) + "}")
    lines.append("")
    lines.append("Projection")
    lines.append(RULE)
    lines.extend(f"  {label} -> {image}" for label, image in summary.projection.items())
    return Outcome(summary, "\n".join(lines), save_text=dump_structure(summary.structure))


def cmd_coreflection(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    t, s = resolve_finite(args.cu_side), resolve_finite(args.q_side)
    _status(f"🔍 Comparing Cu({t.name}, tau({s.name})) with Q({t.name}, {s.name})...")
    report = coreflection_check(t, s, settings)
    lines = _header(f"🧮 COREFLECTION: T = {t.name}, S = {s.name}")
    lines.append(f"|Cu(T, tau(S))| = {report.cu_morphism_count}")
    lines.append(f"|Q(T, S)|       = {report.q_morphism_count}")
    lines.append(f"{'✅' if report.bijective else '❌'} bijective")
    lines.append(f"{'✅' if report.order_isomorphism else '❌'} order-isomorphism")
    if report.failure:
        lines.append(f"   witness: {_witness(report.failure)}")
    return Outcome(report, "\n".join(lines), EXIT_OK if report.passed else EXIT_VIOLATION)


def cmd_path(args: argparse.Namespace, settings: LabSettings) -> Outcome:
    carrier = resolve_carrier(args.carrier)
    p, q = parse_path(args.left, carrier), parse_path(args.right, carrier)
    report = compare_report(p, q, settings)
    lines = _header(f"🧮 PATHS over {carrier.name}")
    lines.append(f"f = {report.left.path}")
    lines.append(f"g = {report.right.path}")
    lines.append(RULE)
    lines.append(f"  f <~ g:  {report.left_le_right.value}")
    lines.append(f"  g <~ f:  {report.right_le_left.value}")
    lines.append(f"  f << g:  {report.left_waybelow_right.value}")
    lines.append(f"  g << f:  {report.right_waybelow_left.value}")
    return Outcome(report, "\n".join(lines))


COMMANDS: dict[str, Callable[[argparse.Namespace, LabSettings], Outcome]] = {
    "validate": cmd_validate,
    "tau": cmd_tau,
    "axioms": cmd_axioms,
    "hom": cmd_hom,
    "bivariant": cmd_bivariant,
    "compose": cmd_compose,
    "evaluate": cmd_evaluate,
    "tensor": cmd_tensor,
    "adjunction": cmd_adjunction,
    "solid": cmd_solid,
    "catalog": cmd_catalog,
    "repro": cmd_repro,
    "ideals": cmd_ideals,
    "quotient": cmd_quotient,
    "coreflection": cmd_coreflection,
    "path": cmd_path,
}


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _output_options(parser: argparse.ArgumentParser, default: object) -> None:
    parser.add_argument("--json", action="store_true", default=default, help="Machine-readable JSON output")
    parser.add_argument(
        "--output", choices=["human", "json"], default=default, help="Output format (default: human)"
    )
    parser.add_argument("--save-to", default=default, help="Write the output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    """
    The argparse tree.

    Output options are accepted before and after the subcommand; the
    subcommand copies only set them when given, so they never reset a
    value given before the subcommand.
    """
    parser = CuntzLabArgumentParser(
        prog="cuntzlab",
        description="Exact computer algebra for abstract Cuntz semigroups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Validate a structure file and compute tau
  %(prog)s validate strict3.json
  %(prog)s tau strict3.json --save-to out/tau.json

  # O5 fails on the bivariant semigroup [[E2,E3]]
  %(prog)s axioms homE2E3.json --check o5

  # Bivariant semigroups and composition
  %(prog)s bivariant --catalog E2 E3
  %(prog)s compose "Pbar->Pbar:soft(2)" "Pbar->Pbar:soft(3)"
  %(prog)s evaluate "Nbar^2->Nbar^2:mat[[0,1],[1,0]]" "(1,inf)"

  # Tensor products and the universal-property falsifier
  %(prog)s tensor "R{2}" "R{3}"
  %(prog)s tensor --falsify e0_diagonal.json

  # Worked examples
  %(prog)s repro ihom-Pbar-Pbar
  %(prog)s repro --all --json
        """,
    )
    _output_options(parser, None)
    common = argparse.ArgumentParser(add_help=False)
    _output_options(common, argparse.SUPPRESS)

    commands = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=CuntzLabArgumentParser)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, help=help_text, description=help_text, parents=[common])

    sub = add("validate", "Check the pom and auxiliary-relation laws of a structure file")
    sub.add_argument("file", help="Structure file (JSON)")

    sub = add("tau", "The Cu-semigroup tau(S) of a finite Q-semigroup; --save-to writes it as a structure file")
    sub.add_argument("file", help="Structure file or finite catalog name")

    sub = add("axioms", "Exhaustive O5/O6 scan of a finite carrier")
    sub.add_argument("file", help="Structure file or finite catalog name")
    sub.add_argument("--check", default="o5,o6", help="Axioms to scan: o5, o6 or o5,o6 (default: o5,o6)")

    sub = add("hom", "Every generalized Cu-morphism between finite carriers")
    sub.add_argument("source")
    sub.add_argument("target")
    sub.add_argument("--bivariant", action="store_true", help="Also compute [[S,T]] (tau of the hom Q-semigroup)")

    sub = add("bivariant", "The bivariant Cu-semigroup [[S,T]]")
    sub.add_argument("--catalog", action="store_true", help="Resolve both names in the catalog only")
    sub.add_argument("source")
    sub.add_argument("target")

    sub = add("compose", "Composition Y o X of bivariant elements written S->T:coordinate")
    sub.add_argument("left", metavar="Y", help="Element of [[T,P]]")
    sub.add_argument("right", metavar="X", help="Element of [[S,T]]")

    sub = add("evaluate", "sigma(X) applied to an element of the source")
    sub.add_argument("element", metavar="X", help="Element S->T:coordinate")
    sub.add_argument("point", metavar="ELT", help="Element of S in its catalog syntax")

    sub = add("tensor", "Resolve S (x) T in the catalog, or falsify a candidate tensor product")
    sub.add_argument("factors", nargs="*", help="Catalog names")
    sub.add_argument("--falsify", metavar="FILE", help="Bimorphism file (S, T, P, omega) to test")
    sub.add_argument(
        "--falsify-canonical", action="store_true", help="Test the catalog answer for two finite factors"
    )
    sub.add_argument("--bound", type=int, default=None, help="Largest test object size (default: falsifier_bound)")

    sub = add("adjunction", "Check Cu(S,[[T,P]]) = CuBimor(S x T, P) on finite carriers")
    sub.add_argument("source", metavar="S")
    sub.add_argument("middle", metavar="T")
    sub.add_argument("target", metavar="P")

    sub = add("solid", "Solidness statuses (1)-(5) of a catalog semiring with spot checks")
    sub.add_argument("name")

    sub = add("catalog", "List catalog carriers or show one")
    sub.add_argument("action", choices=["list", "show"])
    sub.add_argument("name", nargs="?")
    sub.add_argument("--export", metavar="FILE", help="Write a finite carrier as a structure file")

    sub = add("repro", "Re-run golden worked examples")
    sub.add_argument("case_id", nargs="?", metavar="ID")
    sub.add_argument("--all", action="store_true", help="Run every case")

    sub = add("ideals", "Every ideal of a finite Cu-semigroup with its largest element z_J")
    sub.add_argument("file")

    sub = add("quotient", "The quotient S/J by an ideal given by its labels")
    sub.add_argument("file")
    sub.add_argument("--ideal", required=True, help="Comma-separated member labels of J")

    sub = add("coreflection", "Check Cu(T, tau(S)) = Q(T, S) on finite carriers")
    sub.add_argument("cu_side", metavar="T", help="Finite Cu-semigroup")
    sub.add_argument("q_side", metavar="S", help="Finite Q-semigroup")

    sub = add("path", "Compare two paths f, g: <~ in both directions and way-below")
    sub.add_argument("left", metavar="F", help="e.g. scaled(1)")
    sub.add_argument("right", metavar="G", help="e.g. const(1)")
    sub.add_argument("--carrier", required=True, help="Carrier the paths live in, e.g. Pbar<1")

    return parser


# ---------------------------------------------------------------------------
# Entry points
# ---------------------------------------------------------------------------


def _emit(outcome: Outcome, as_json: bool, save_to: str | None) -> None:
    output = outcome.report.model_dump_json(indent=2) if as_json else outcome.human
    if save_to:
        path = Path(save_to)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(outcome.save_text if outcome.save_text is not None else output + "\n", encoding="utf-8")
        _status(f"💾 Saved to: {path}")
        if outcome.save_text is None:
            return
    print(output)


def run(argv: list[str] | None = None) -> int:
    """
    Parse argv, run the command and map errors to exit codes.

    Returns:
        int: 0 success, 1 input failure, 2 violation found, 3 usage error,
             130 interrupted
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        settings = CuntzLabConfig.load_settings()
        outcome = COMMANDS[args.command](args, settings)
        _emit(outcome, args.json or args.output == "json", args.save_to)
        return outcome.code

    except SystemExit as e:  # --help
        return int(e.code or 0)
    except KeyboardInterrupt:
        print("\n⚠️  Operation cancelled by user", file=sys.stderr)
        return EXIT_INTERRUPTED
    except UsageError as e:
        print(f"❌ USAGE: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NoClosedFormError as e:
        print(f"❌ UNSUPPORTED: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"❌ INVALID INPUT: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BoundExceededError as e:
        print(f"❌ REFUSED: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (StructureError, PreconditionError, UnsupportedOperationError, CuntzLabError) as e:
        print(f"❌ ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError) as e:
        print(f"❌ ERROR: {e}", file=sys.stderr)
        return EXIT_INPUT


def main() -> int:
    """Console-script entry point (`cuntzlab`)."""
    return run()


if __name__ == "__main__":
    sys.exit(main())
