"""
Worked-Example Registry for cuntzlab

Every case of data/repro/golden.yaml is paired with the computation that
produces it. `repro ID` runs one case, `repro --all` runs them in file
order; each result carries the case's citation.

ARCHITECTURE NOTE:
This is Layer 2 of our 3-layer architecture:
    Layer 1: Pydantic Models - Data validation (repro_inputs.py)
    Layer 2: Calculator Classes (THIS FILE) - Exact algebra
    Layer 3: CLI Interface - Command-line front end

EDUCATIONAL NOTE:
Computations return plain strings, lists, booleans and dicts so they can
be compared to YAML values by equality. A computation that raises does
not abort `--all`: its case fails with the exception text.

Author: cuntzlab Development Team
Created: 2026-10-17
"""

from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any

import yaml

from src.algebra.bivariant import bivariant, compact_morphisms, compose, evaluate
from src.algebra.bivariant_checks import hex_nonsimple_witness, semiring_map_check, solid_status
from src.algebra.catalog import Compact, NbarPower, Soft, catalog
from src.algebra.core_order import check_o5
from src.algebra.errors import CuntzLabError, PreconditionError, StructureError
from src.algebra.extended import INF
from src.algebra.finite_q import strict_chain, tau_finite
from src.config import CuntzLabConfig
from src.models.repro_inputs import ReproCase, ReproReport, ReproResult
from src.models.settings_inputs import LabSettings

Computation = Callable[[LabSettings], Any]

EPS_PI_RINGS = ("Pbar", "Z", "R{2}", "E3", "M1")
CHAR_SOLID_RINGS = ("Pbar", "M1")

# 2x2 sample with a 0 * inf entry, so the convention 0 * inf = 0 is exercised
MATRIX_LEFT = ((1, 2), (0, INF))
MATRIX_RIGHT = ((3, 0), (1, 1))


def rational_sample(count: int = 50) -> list[Fraction]:
    """The `count` smallest positive rationals with denominator at most 7."""
    values = {Fraction(n, d) for d in range(1, 8) for n in range(1, 4 * d + 1)}
    return sorted(values)[:count]


def m1_rule_failure(values: list[Fraction]) -> list[str] | None:
    """
    First pair of values breaking the addition/order rules of M1 = [[Pbar,Pbar]].

    Compact classes [f_a] and soft classes [f'_a] add like their values
    (compact + compact stays compact, anything with a soft summand is
    soft) and compare by a < b from compact to soft, a <= b otherwise.
    """
    space = bivariant(catalog("Pbar"), catalog("Pbar"))
    m1 = space.carrier
    for a in values:
        for b in values:
            if m1.add(Compact(a), Soft(b)) != Soft(a + b):
                return ["add", m1.format(Compact(a)), m1.format(Soft(b))]
            if m1.add(Compact(a), Compact(b)) != Compact(a + b):
                return ["add", m1.format(Compact(a)), m1.format(Compact(b))]
            if m1.leq(Compact(a), Soft(b)) != (a < b):
                return ["leq", m1.format(Compact(a)), m1.format(Soft(b))]
            if m1.leq(Soft(a), Compact(b)) != (a <= b):
                return ["leq", m1.format(Soft(a)), m1.format(Compact(b))]
            if evaluate(space.element(Soft(a)), b) != a * b:
                return ["sigma", m1.format(Soft(a)), str(b)]
    return None


def _ihom_e2_e3(settings: LabSettings) -> Any:
    return bivariant(catalog("E2"), catalog("E3"), settings).summary().display()


def _ihom_pbar_pbar(settings: LabSettings) -> Any:
    space = bivariant(catalog("Pbar"), catalog("Pbar"), settings)
    product = compose(space.element(Soft(Fraction(2))), space.element(Soft(Fraction(3))), settings)
    return {
        "carrier": space.carrier.name,
        "rules_hold": m1_rule_failure(rational_sample()) is None,
        "soft_2_after_soft_3": space.format(product.coordinate),
    }


def _ihom_r2_r3(settings: LabSettings) -> Any:
    source, target = catalog("R{2}"), catalog("R{3}")
    return {
        "carrier": bivariant(source, target, settings).carrier.name,
        "compact": compact_morphisms(source, target, settings).elements,
    }


def _matrix_compose(settings: LabSettings) -> Any:
    space = bivariant(NbarPower(2), NbarPower(2), settings)
    product = compose(space.element(MATRIX_LEFT), space.element(MATRIX_RIGHT), settings)
    return space.format(product.coordinate)


def _o5_failure(settings: LabSettings) -> Any:
    carrier = bivariant(catalog("E2"), catalog("E3"), settings).carrier
    report = check_o5(carrier, settings)
    return list(report.witnesses()[0]) if report.witnesses() else []


def _tau_strict3(settings: LabSettings) -> Any:
    return "{" + ",".join(tau_finite(strict_chain(3)).cu.labels) + "}"


def _eps_pi(settings: LabSettings) -> Any:
    return {name: semiring_map_check(catalog(name), settings=settings).eps_pi_identity for name in EPS_PI_RINGS}


def _charsolid(settings: LabSettings) -> Any:
    table = {}
    for name in CHAR_SOLID_RINGS:
        report = solid_status(name, settings)
        table[name] = {"statuses": [report.statuses[i] for i in range(1, 6)], "checks_pass": report.passed}
    return table


def _hex_nonsimple(settings: LabSettings) -> Any:
    report = hex_nonsimple_witness(settings=settings)
    return {"carrier": report.carrier, "ideal_bound": report.bound, "excluded": report.excluded, "passed": report.passed}


COMPUTATIONS: dict[str, Computation] = {
    "ihom-E2-E3": _ihom_e2_e3,
    "ihom-Pbar-Pbar": _ihom_pbar_pbar,
    "ihom-R2-R3": _ihom_r2_r3,
    "matrix-compose": _matrix_compose,
    "o5-failure": _o5_failure,
    "tau-strict3": _tau_strict3,
    "eps-pi": _eps_pi,
    "charsolid": _charsolid,
    "hex-nonsimple": _hex_nonsimple,
}


def load_cases(path: Path | None = None) -> list[ReproCase]:
    """
    Read the golden file.

    Raises:
        StructureError: If the file is not a list of cases
        pydantic.ValidationError: If a case is malformed
    """
    path = path or CuntzLabConfig.GOLDEN_FILE
    with open(path, encoding="utf-8") as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict) or not isinstance(data.get("cases"), list):
        raise StructureError(f"{path}: expected a mapping with a 'cases' list")
    return [ReproCase.model_validate(case) for case in data["cases"]]


def run_case(case: ReproCase, settings: LabSettings | None = None) -> ReproResult:
    """Run one golden case and compare with its expected value."""
    settings = settings or LabSettings()
    computation = COMPUTATIONS.get(case.id)
    fields = case.model_dump(include={"id", "description", "provenance", "citation", "expected"})
    if computation is None:
        return ReproResult(**fields, error=f"no computation registered for {case.id!r}", passed=False)
    try:
        actual = computation(settings)
    except (CuntzLabError, ValueError) as exc:
        return ReproResult(**fields, error=str(exc), passed=False)
    return ReproResult(**fields, actual=actual, passed=actual == case.expected)


def run_repro(
    case_id: str | None = None, settings: LabSettings | None = None, path: Path | None = None
) -> ReproReport:
    """
    Run one case by id, or every case when case_id is None.

    Raises:
        PreconditionError: If case_id is not in the golden file
    """
    cases = load_cases(path)
    if case_id is not None:
        cases = [case for case in cases if case.id == case_id]
        if not cases:
            known = ", ".join(case.id for case in load_cases(path))
            raise PreconditionError(f"Unknown repro case {case_id!r}; known: {known}")
    return ReproReport(results=[run_case(case, settings) for case in cases])


__all__ = [
    "COMPUTATIONS",
    "EPS_PI_RINGS",
    "CHAR_SOLID_RINGS",
    "rational_sample",
    "m1_rule_failure",
    "load_cases",
    "run_case",
    "run_repro",
]
