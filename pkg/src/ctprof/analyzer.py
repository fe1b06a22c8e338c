"""Forward analysis: profile + ruleset -> competency activation report.

A leaf is activable when all its required atoms hold, each required_any
group is hit, and no inhibitor holds. Blocked leaves list every failure
(one reason per unmet required atom, per unsatisfied group, per satisfied
inhibitor) so design tooling can render actionable hints. Support scores
are computed for blocked leaves too; support never gates activation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import catalog
from .descriptor import CharacteristicProfile
from .ruleset import Rule, RuleSet

DIFF_DIMENSIONS = (
    "resettability",
    "observability",
    "cardinality",
    "explicitness",
    "constrained",
    "representation",
    "state_unknown",
)


@dataclass(frozen=True)
class Reason:
    kind: str  # missing_required | missing_any_group | inhibited
    atoms: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "atoms": list(self.atoms)}


@dataclass(frozen=True)
class LeafResult:
    status: str  # activable | blocked
    reasons: tuple[Reason, ...]
    support_score: int
    supporters_present: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "reasons": [r.to_json_dict() for r in self.reasons],
            "support_score": self.support_score,
            "supporters_present": list(self.supporters_present),
        }


@dataclass(frozen=True)
class AnalysisReport:
    profile: CharacteristicProfile
    ruleset_meta: dict
    results: dict[str, LeafResult]

    def activable(self) -> frozenset[str]:
        return frozenset(k for k, v in self.results.items() if v.status == "activable")

    def to_json_dict(self) -> dict:
        return {
            "profile": self.profile.to_json_dict(),
            "ruleset": dict(self.ruleset_meta),
            "results": {leaf: self.results[leaf].to_json_dict() for leaf in catalog.LEAF_ORDER},
        }


@lru_cache(maxsize=None)
def _rule_plan(rule: Rule):
    return (
        catalog.sort_atoms(rule.required),
        tuple((group, catalog.sort_atoms(group)) for group in rule.required_any),
        catalog.sort_atoms(rule.inhibitors),
    )


def _evaluate_rule(atoms: frozenset[str], rule: Rule) -> LeafResult:
    required, groups, inhibitors = _rule_plan(rule)
    reasons = []
    for atom in required:
        if atom not in atoms:
            reasons.append(Reason("missing_required", (atom,)))
    for group, ordered in groups:
        if not (group & atoms):
            reasons.append(Reason("missing_any_group", ordered))
    for atom in inhibitors:
        if atom in atoms:
            reasons.append(Reason("inhibited", (atom,)))
    present = catalog.sort_atoms(rule.supporters & atoms)
    return LeafResult(
        status="activable" if not reasons else "blocked",
        reasons=tuple(reasons),
        support_score=len(present),
        supporters_present=present,
    )


def analyze(profile: CharacteristicProfile, rules: RuleSet) -> AnalysisReport:
    """Evaluate every leaf rule against the profile."""
    atoms = catalog.profile_atoms(profile)
    results = {leaf: _evaluate_rule(atoms, rules.rule(leaf)) for leaf in catalog.LEAF_ORDER}
    return AnalysisReport(profile=profile, ruleset_meta=rules.metadata(), results=results)


@dataclass(frozen=True)
class DimensionChange:
    dimension: str
    before: object
    after: object

    def to_json_dict(self) -> dict:
        return {"dimension": self.dimension, "before": self.before, "after": self.after}


@dataclass(frozen=True)
class ProfileDiff:
    changed: tuple[DimensionChange, ...]
    functionality_added: tuple[str, ...]
    functionality_removed: tuple[str, ...]
    competencies_gained: tuple[str, ...]
    competencies_lost: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "changed": [c.to_json_dict() for c in self.changed],
            "functionality_added": list(self.functionality_added),
            "functionality_removed": list(self.functionality_removed),
            "competencies_gained": list(self.competencies_gained),
            "competencies_lost": list(self.competencies_lost),
        }


def _leaf_order(names) -> tuple[str, ...]:
    order = {leaf: i for i, leaf in enumerate(catalog.LEAF_ORDER)}
    return tuple(sorted(names, key=order.__getitem__))


def diff_profiles(a: CharacteristicProfile, b: CharacteristicProfile,
                  rules: RuleSet) -> ProfileDiff:
    """Dimension-wise comparison plus the activable-set delta under ``rules``.

    The domain is context (the paper's comparison keeps domains as columns),
    so it is not listed among the changed dimensions; functionalities are
    reported as added/removed sets.
    """
    changed = tuple(
        DimensionChange(dim, getattr(a, dim), getattr(b, dim))
        for dim in DIFF_DIMENSIONS
        if getattr(a, dim) != getattr(b, dim)
    )
    act_a = analyze(a, rules).activable()
    act_b = analyze(b, rules).activable()
    return ProfileDiff(
        changed=changed,
        functionality_added=tuple(sorted(b.functionalities - a.functionalities)),
        functionality_removed=tuple(sorted(a.functionalities - b.functionalities)),
        competencies_gained=_leaf_order(act_b - act_a),
        competencies_lost=_leaf_order(act_a - act_b),
    )
