"""
Golden fact table for the catalog Cu-semirings.

Rows live in data/catalog/semiring_facts.yaml and are validated into
SemiringFacts models on first use.
"""

import re
from functools import lru_cache

import yaml

from src.algebra.catalog import CATALOG_DESCRIPTIONS, catalog
from src.algebra.errors import PreconditionError
from src.config import CuntzLabConfig
from src.models.catalog_inputs import CatalogEntry, CatalogListing, SemiringFacts

FACTS_FILE = CuntzLabConfig.DATA_DIR / "catalog" / "semiring_facts.yaml"

# implications between the solidness statuses: (premise, conclusion)
CHAR_SOLID_IMPLICATIONS: tuple[tuple[int, int], ...] = ((2, 1), (2, 3), (4, 3), (4, 5), (5, 4))


@lru_cache(maxsize=1)
def fact_table() -> dict[str, SemiringFacts]:
    with open(FACTS_FILE, encoding="utf-8") as f:
        raw = yaml.safe_load(f)
    return {name: SemiringFacts(name=name, **row) for name, row in raw.items()}


def fact_key(name: str) -> str:
    """Map a concrete catalog name onto its fact-table row."""
    if re.fullmatch(r"E\d+", name):
        return "E<k>"
    if re.fullmatch(r"R\{?[\d,\s]+\}?", name):
        return "R{p,...}"
    return name


def facts(name: str) -> SemiringFacts:
    """
    The golden fact row of a catalog carrier.

    Raises:
        PreconditionError: If the carrier has no fact row
    """
    key = fact_key(name)
    table = fact_table()
    if key not in table:
        raise PreconditionError(f"No fact row for {name!r}; rows exist for {', '.join(table)}")
    return table[key]


def implication_violations(row: SemiringFacts) -> list[str]:
    """
    Statuses that break (2)=>(1), (2)=>(3), (4)=>(3), (4)<=>(5) or (1)&(3)=>(2).

    Unsettled statuses are skipped.
    """
    problems = []
    for premise, conclusion in CHAR_SOLID_IMPLICATIONS:
        if row.status(premise) is True and row.status(conclusion) is False:
            problems.append(f"({premise}) => ({conclusion})")
    if row.status(1) is True and row.status(3) is True and row.status(2) is False:
        problems.append("(1) & (3) => (2)")
    return problems


def family_key(name: str) -> str:
    """Map a concrete catalog name onto its CATALOG_DESCRIPTIONS family."""
    if re.fullmatch(r"Nbar\^\d+", name):
        return "Nbar^k"
    if re.fullmatch(r"Mat\[\d+,\s*\d+\]", name):
        return "Mat[l,k]"
    return fact_key(name)


def catalog_listing() -> CatalogListing:
    return CatalogListing(
        entries=[CatalogEntry(name=name, description=text) for name, text in CATALOG_DESCRIPTIONS.items()]
    )


def describe_carrier(name: str, sample_size: int = 8, seed: int = 0) -> CatalogEntry:
    """
    `catalog show NAME`: elements or a sample, product and unit, fact row.

    Raises:
        PreconditionError: Unknown catalog name
    """
    carrier = catalog(name)
    try:
        row: SemiringFacts | None = facts(carrier.name)
    except PreconditionError:
        row = None
    return CatalogEntry(
        name=carrier.name,
        description=CATALOG_DESCRIPTIONS.get(family_key(carrier.name), ""),
        finite=carrier.is_finite,
        has_product=carrier.has_product,
        unit=carrier.format(carrier.unit) if carrier.has_product else None,
        elements=[carrier.format(e) for e in carrier.elements()] if carrier.is_finite else None,
        sample=None if carrier.is_finite else [carrier.format(e) for e in carrier.sample(sample_size, seed)],
        facts=row,
    )


__all__ = [
    "FACTS_FILE",
    "CHAR_SOLID_IMPLICATIONS",
    "fact_table",
    "fact_key",
    "facts",
    "implication_violations",
    "family_key",
    "catalog_listing",
    "describe_carrier",
]
