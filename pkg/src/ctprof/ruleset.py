"""Characteristics-to-competencies relation matrix.

Each leaf competency carries one rule: atoms that must all hold (required),
groups where at least one atom per group must hold (required_any), atoms
that must not hold (inhibitors) and atoms that merely raise the support
score (supporters). Rulesets are plain data loaded from ``.rules.json``
files so alternative readings of the matrix stay testable; the bundled
default lives in ``rulesets/fade_default.rules.json`` with its provenance
notes alongside.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import catalog
from .errors import (
    MissingCompetency,
    OverlapError,
    ParseError,
    SchemaError,
    UnknownAtom,
    UnknownCompetency,
)
from .descriptor import ValidationIssue, _load_json

DEFAULT_RULESET_RESOURCE = "fade_default.rules.json"


@dataclass(frozen=True)
class Rule:
    competency: str
    required: frozenset[str]
    required_any: tuple[frozenset[str], ...]
    inhibitors: frozenset[str]
    supporters: frozenset[str]


@dataclass(frozen=True)
class RuleSet:
    name: str
    version: int
    notes: str
    rules: dict[str, Rule]

    def rule(self, competency: str) -> Rule:
        return self.rules[competency]

    def metadata(self) -> dict:
        return {"name": self.name, "version": self.version, "notes": self.notes}


def _check_atoms(names, competency: str, slot: str) -> frozenset[str]:
    for name in names:
        if not catalog.is_atom(name):
            raise UnknownAtom(f"rule {competency!r}, {slot}: unknown atom {name!r}")
    return frozenset(names)


def load_ruleset(text: str) -> RuleSet:
    """Parse and fully check a ruleset document."""
    data = _load_json(text)
    if not isinstance(data, dict):
        raise ParseError("ruleset document must be a JSON object")
    issues = []
    for key in data:
        if key not in ("name", "version", "notes", "rules"):
            issues.append(ValidationIssue("BadFieldPresence", key, "unknown key"))
    for key in ("name", "version", "notes", "rules"):
        if key not in data:
            issues.append(ValidationIssue("BadFieldPresence", key, "missing required key"))
    if issues:
        raise SchemaError(issues)

    leaves = catalog.LEAF_ORDER
    raw_rules = data["rules"]
    if not isinstance(raw_rules, dict):
        raise SchemaError([ValidationIssue("BadFieldPresence", "rules", "expected an object")])
    for competency in raw_rules:
        if competency not in leaves:
            raise UnknownCompetency(f"{competency!r} is not a leaf competency")
    missing = [leaf for leaf in leaves if leaf not in raw_rules]
    if missing:
        raise MissingCompetency(f"no rule for: {', '.join(missing)}")

    rules: dict[str, Rule] = {}
    for leaf in leaves:
        raw = raw_rules[leaf]
        if not isinstance(raw, dict):
            raise SchemaError([ValidationIssue("BadFieldPresence", f"rules.{leaf}",
                                               "expected an object")])
        for key in raw:
            if key not in ("required", "required_any", "inhibitors", "supporters"):
                raise SchemaError([ValidationIssue("BadFieldPresence", f"rules.{leaf}.{key}",
                                                   "unknown key")])
        required = _check_atoms(raw.get("required", []), leaf, "required")
        inhibitors = _check_atoms(raw.get("inhibitors", []), leaf, "inhibitors")
        supporters = _check_atoms(raw.get("supporters", []), leaf, "supporters")
        groups = []
        for i, group in enumerate(raw.get("required_any", [])):
            atoms = _check_atoms(group, leaf, f"required_any[{i}]")
            if len(atoms) < 2:
                raise SchemaError([ValidationIssue(
                    "BadFieldPresence", f"rules.{leaf}.required_any[{i}]",
                    "groups need at least 2 atoms; single atoms belong in required")])
            groups.append(atoms)
        if required & inhibitors:
            raise OverlapError(
                f"rule {leaf!r}: required and inhibitors share "
                f"{', '.join(sorted(required & inhibitors))}")
        if supporters & (required | inhibitors):
            raise OverlapError(
                f"rule {leaf!r}: supporters overlap required/inhibitors: "
                f"{', '.join(sorted(supporters & (required | inhibitors)))}")
        rules[leaf] = Rule(
            competency=leaf,
            required=required,
            required_any=tuple(groups),
            inhibitors=inhibitors,
            supporters=supporters,
        )

    version = data["version"]
    if not isinstance(version, int) or isinstance(version, bool):
        raise SchemaError([ValidationIssue("BadFieldPresence", "version", "expected an integer")])
    return RuleSet(
        name=str(data["name"]),
        version=version,
        notes=str(data["notes"]),
        rules=rules,
    )


def ruleset_to_json_dict(rs: RuleSet) -> dict:
    """Canonical plain-dict form: leaf order, atoms in vocabulary order."""
    return {
        "name": rs.name,
        "version": rs.version,
        "notes": rs.notes,
        "rules": {
            leaf: {
                "required": list(catalog.sort_atoms(rule.required)),
                "required_any": [list(catalog.sort_atoms(g)) for g in rule.required_any],
                "inhibitors": list(catalog.sort_atoms(rule.inhibitors)),
                "supporters": list(catalog.sort_atoms(rule.supporters)),
            }
            for leaf, rule in ((leaf, rs.rules[leaf]) for leaf in catalog.LEAF_ORDER)
        },
    }


def serialize_ruleset(rs: RuleSet) -> str:
    return json.dumps(ruleset_to_json_dict(rs), indent=2, ensure_ascii=False) + "\n"


@lru_cache(maxsize=1)
def default_ruleset() -> RuleSet:
    """The shipped default ruleset (identical to loading the bundled file)."""
    text = resources.files("ctprof.rulesets").joinpath(DEFAULT_RULESET_RESOURCE).read_text("utf-8")
    return load_ruleset(text)


def strip_supporters(rs: RuleSet) -> RuleSet:
    """Copy of a ruleset with every supporter removed (support must not gate)."""
    return RuleSet(
        name=rs.name,
        version=rs.version,
        notes=rs.notes,
        rules={
            leaf: Rule(rule.competency, rule.required, rule.required_any,
                       rule.inhibitors, frozenset())
            for leaf, rule in rs.rules.items()
        },
    )
