"""Descriptor corpora and the per-domain taxonomy tables.

A corpus is a directory of ``.ctp.json`` files (plus an optional
``corpus_manifest.json`` recording known deviations between the engine and
the source framework's published analyses). Aggregation produces two kinds
of tables: the share of profiles carrying each characteristic value per
domain, and the share of units for which each competency is activable.
Percentages are integers rounded half away from zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import catalog
from .analyzer import analyze
from .descriptor import (
    CharacteristicProfile,
    Descriptor,
    ValidationIssue,
    derive_characteristics,
    parse_descriptor,
    validate_descriptor,
)
from .errors import CorpusLoadError, EmptyCorpus, ParseError, SchemaError, UnderivableDomain
from .ruleset import RuleSet

MANIFEST_FILENAME = "corpus_manifest.json"
_DEVIATION_KEYS = ("fixture", "competency", "paper_claim", "engine_result", "citation")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    group: str | None
    descriptor: Descriptor
    profile: CharacteristicProfile
    source_path: str

    @property
    def unit(self) -> str:
        """Aggregation unit: the activity family when one is declared."""
        return self.group or self.name


@dataclass(frozen=True)
class Corpus:
    entries: tuple[CorpusEntry, ...]
    manifest: dict

    def domains(self) -> tuple[str, ...]:
        present = {e.profile.domain for e in self.entries}
        return tuple(d for d in catalog.DOMAINS if d in present)


def load_corpus(directory) -> Corpus:
    """Load every ``.ctp.json`` file under ``directory`` (sorted by path)."""
    root = Path(directory)
    files = sorted(root.glob("*.ctp.json"))
    if not files:
        raise EmptyCorpus(f"no .ctp.json files in {root}")

    entries: list[CorpusEntry] = []
    failures: dict[str, list[ValidationIssue]] = {}
    seen_names: dict[str, str] = {}
    for path in files:
        key = str(path)
        try:
            descriptor = parse_descriptor(path.read_text("utf-8"))
        except ParseError as exc:
            failures[key] = [ValidationIssue("BadFieldPresence", "(document)", str(exc))]
            continue
        except SchemaError as exc:
            failures[key] = list(exc.issues)
            continue
        issues = validate_descriptor(descriptor)
        if issues:
            failures[key] = issues
            continue
        if descriptor.name in seen_names:
            failures[key] = [ValidationIssue(
                "DuplicateName", "name",
                f"{descriptor.name!r} already used by {seen_names[descriptor.name]}")]
            continue
        try:
            profile = derive_characteristics(descriptor)
        except UnderivableDomain as exc:
            failures[key] = [ValidationIssue("DomainMismatch", "components", str(exc))]
            continue
        seen_names[descriptor.name] = key
        entries.append(CorpusEntry(
            name=descriptor.name,
            group=descriptor.group,
            descriptor=descriptor,
            profile=profile,
            source_path=key,
        ))

    manifest = {"known_deviations": []}
    manifest_path = root / MANIFEST_FILENAME
    if manifest_path.exists():
        try:
            manifest = _load_manifest(manifest_path, {e.name for e in entries})
        except SchemaError as exc:
            failures[str(manifest_path)] = list(exc.issues)

    if failures:
        raise CorpusLoadError(failures, entries)
    return Corpus(entries=tuple(entries), manifest=manifest)


def _load_manifest(path: Path, entry_names: set[str]) -> dict:
    try:
        data = json.loads(path.read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError([ValidationIssue("BadFieldPresence", "(document)",
                                           f"invalid JSON: {exc.msg}")]) from exc
    issues = []
    if not isinstance(data, dict) or "known_deviations" not in data:
        issues.append(ValidationIssue("BadFieldPresence", "known_deviations",
                                      "missing required key"))
        raise SchemaError(issues)
    for i, dev in enumerate(data["known_deviations"]):
        for key in _DEVIATION_KEYS:
            if key not in dev:
                issues.append(ValidationIssue("BadFieldPresence",
                                              f"known_deviations[{i}].{key}", "missing key"))
        fixture = dev.get("fixture")
        if fixture is not None and fixture not in entry_names:
            issues.append(ValidationIssue("UnknownEnum", f"known_deviations[{i}].fixture",
                                          f"{fixture!r} is not a corpus entry"))
        competency = dev.get("competency")
        if competency is not None and competency not in catalog.LEAF_ORDER:
            issues.append(ValidationIssue("UnknownEnum", f"known_deviations[{i}].competency",
                                          f"{competency!r} is not a leaf competency"))
    if issues:
        raise SchemaError(issues)
    return data


# ---------------------------------------------------------------------------
# Taxonomy tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cell:
    numerator: int
    denominator: int

    @property
    def percent(self) -> int:
        # round half away from zero on a non-negative ratio
        return (200 * self.numerator + self.denominator) // (2 * self.denominator)

    def to_json_dict(self) -> dict:
        return {"percent": self.percent, "numerator": self.numerator,
                "denominator": self.denominator}


@dataclass(frozen=True)
class TaxonomyRow:
    section: str
    key: str
    cells: dict[str, Cell]

    def to_json_dict(self) -> dict:
        return {"section": self.section, "key": self.key,
                "cells": {d: c.to_json_dict() for d, c in self.cells.items()}}


@dataclass(frozen=True)
class TaxonomyTable:
    kind: str  # characteristics | competencies
    collapse_groups: bool
    domains: tuple[str, ...]
    rows: tuple[TaxonomyRow, ...]

    def cell(self, key: str, domain: str) -> Cell:
        for row in self.rows:
            if row.key == key:
                return row.cells[domain]
        raise KeyError(key)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "collapse_groups": self.collapse_groups,
            "domains": list(self.domains),
            "rows": [r.to_json_dict() for r in self.rows],
        }


# Value rows per family, each followed by the derived alias share when one exists.
_CHARACTERISTIC_ROWS: list[tuple[str, str]] = (
    [("functionality", f) for f in catalog.FUNCTIONALITIES]
    + [("resettability", v) for v in catalog.FAMILY_VALUES["resettability"]]
    + [("resettability", "resettable")]
    + [("observability", v) for v in catalog.FAMILY_VALUES["observability"]]
    + [("observability", "observable")]
    + [("cardinality", v) for v in catalog.FAMILY_VALUES["cardinality"]]
    + [("explicitness", v) for v in catalog.FAMILY_VALUES["explicitness"]]
    + [("constraints", v) for v in catalog.FAMILY_VALUES["constraints"]]
    + [("representation", v) for v in catalog.FAMILY_VALUES["representation"]]
    + [("representation", "manifest")]
)

ALIAS_ROW_KEYS = ("resettable", "observable", "manifest")


def _profile_has(profile: CharacteristicProfile, section: str, key: str) -> bool:
    if section == "functionality":
        return key in profile.functionalities
    if key in ALIAS_ROW_KEYS:
        atoms = catalog.profile_atoms(profile)
        return key in atoms
    if section == "constraints":
        return profile.constrained == (key == "constrained")
    return getattr(profile, section) == key


def characteristics_taxonomy(c: Corpus) -> TaxonomyTable:
    """Per domain, the share of profiles carrying each characteristic value."""
    if not c.entries:
        raise EmptyCorpus("corpus has no entries")
    domains = c.domains()
    by_domain = {d: [e.profile for e in c.entries if e.profile.domain == d] for d in domains}
    rows = []
    for section, key in _CHARACTERISTIC_ROWS:
        cells = {}
        for d in domains:
            profiles = by_domain[d]
            hits = sum(1 for p in profiles if _profile_has(p, section, key))
            cells[d] = Cell(hits, len(profiles))
        rows.append(TaxonomyRow(section, key, cells))
    return TaxonomyTable("characteristics", False, domains, tuple(rows))


def _leaf_section(leaf: str) -> str:
    tree = catalog.competency_tree()
    node = leaf
    while tree.parent(node) is not None:
        node = tree.parent(node)
    return node


def competencies_taxonomy(c: Corpus, rules: RuleSet,
                          collapse_groups: bool = False) -> TaxonomyTable:
    """Per domain, the share of units for which each leaf is activable.

    Without collapsing, every profile is a unit. With ``collapse_groups``,
    the files of an activity family form one unit that counts activable only
    when every member profile is (the family's shared competency set).
    """
    if not c.entries:
        raise EmptyCorpus("corpus has no entries")
    domains = c.domains()
    activable = {e.name: analyze(e.profile, rules).activable() for e in c.entries}

    units: dict[str, list[frozenset[str]]] = {d: [] for d in domains}
    if collapse_groups:
        grouped: dict[str, list[CorpusEntry]] = {}
        for e in c.entries:
            grouped.setdefault(e.unit, []).append(e)
        for members in grouped.values():
            shared = frozenset.intersection(*(activable[m.name] for m in members))
            units[members[0].profile.domain].append(shared)
    else:
        for e in c.entries:
            units[e.profile.domain].append(activable[e.name])

    rows = []
    for leaf in catalog.LEAF_ORDER:
        cells = {}
        for d in domains:
            hits = sum(1 for act in units[d] if leaf in act)
            cells[d] = Cell(hits, len(units[d]))
        rows.append(TaxonomyRow(_leaf_section(leaf), leaf, cells))
    return TaxonomyTable("competencies", collapse_groups, domains, tuple(rows))
