"""Backward design: target competencies -> characteristic constraints and profiles.

From a set of competencies to develop (and optionally to avoid), the designer
derives the atom-level constraints, reports conflicts, and exhaustively
enumerates the finite profile space to produce concrete admissible profiles
ranked by how much support the targeted competencies would receive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import bitmask, catalog
from .descriptor import CharacteristicProfile
from .errors import EmptyDevelopSet, InvalidDesignQuery, UnknownCompetency
from .ruleset import RuleSet

DEFAULT_MAX_SOLUTIONS = 20

# Lock dimension -> admissible values (functionalities and booleans handled apart).
_LOCK_FAMILIES = {
    "resettability": catalog.FAMILY_VALUES["resettability"],
    "observability": catalog.FAMILY_VALUES["observability"],
    "cardinality": catalog.FAMILY_VALUES["cardinality"],
    "explicitness": catalog.FAMILY_VALUES["explicitness"],
    "representation": catalog.FAMILY_VALUES["representation"],
    "domain": catalog.DOMAINS,
}

# How an alias atom can be contradicted by a single locked dimension.
_ALIAS_BLOCKERS = {
    "resettable": ("resettability", ("direct", "indirect")),
    "observable": ("observability", ("total", "partial")),
    "manifest": ("representation", ("manifest_written", "manifest_non_written")),
}


@dataclass(frozen=True)
class DesignQuery:
    develop: frozenset[str]
    avoid: frozenset[str] = frozenset()
    locked: dict = field(default_factory=dict)
    max_solutions: int = DEFAULT_MAX_SOLUTIONS


@dataclass(frozen=True)
class Conflict:
    competency_a: str
    competency_b: str | None
    atom: str
    explanation: str

    def to_json_dict(self) -> dict:
        return {
            "competency_a": self.competency_a,
            "competency_b": self.competency_b,
            "atom": self.atom,
            "explanation": self.explanation,
        }


@dataclass(frozen=True)
class RankedProfile:
    profile: CharacteristicProfile
    support_total: int

    def to_json_dict(self) -> dict:
        return {"profile": self.profile.to_json_dict(), "support_total": self.support_total}


@dataclass(frozen=True)
class DesignSolution:
    must: tuple[str, ...]
    must_not: tuple[str, ...]
    choose_one_of: tuple[tuple[str, ...], ...]
    conflicts: tuple[Conflict, ...]
    profiles: tuple[RankedProfile, ...]
    feasible: bool

    def to_json_dict(self) -> dict:
        return {
            "constraints": {
                "must": list(self.must),
                "must_not": list(self.must_not),
                "choose_one_of": [list(g) for g in self.choose_one_of],
            },
            "conflicts": [c.to_json_dict() for c in self.conflicts],
            "profiles": [p.to_json_dict() for p in self.profiles],
            "feasible": self.feasible,
        }


def validate_query(q: DesignQuery) -> None:
    if not q.develop:
        raise EmptyDevelopSet("develop set must be non-empty")
    leaves = set(catalog.LEAF_ORDER)
    for comp in sorted(q.develop | q.avoid):
        if comp not in leaves:
            raise UnknownCompetency(f"{comp!r} is not a leaf competency")
    if q.develop & q.avoid:
        raise InvalidDesignQuery(
            "develop and avoid overlap: " + ", ".join(sorted(q.develop & q.avoid)))
    if q.max_solutions < 1:
        raise InvalidDesignQuery("max_solutions must be >= 1")
    for dim, value in q.locked.items():
        if dim == "functionalities":
            bad = set(value) - set(catalog.FUNCTIONALITIES)
            if bad:
                raise InvalidDesignQuery(f"unknown functionalities locked: {sorted(bad)}")
        elif dim in ("constrained", "state_unknown"):
            if not isinstance(value, bool):
                raise InvalidDesignQuery(f"lock {dim} expects true/false")
        elif dim in _LOCK_FAMILIES:
            if value not in _LOCK_FAMILIES[dim]:
                raise InvalidDesignQuery(f"lock {dim}={value!r} is not an admissible value")
        else:
            raise InvalidDesignQuery(f"unknown lock dimension {dim!r}")


def _atom_forced_false(atom: str, locked: dict) -> bool:
    """True when the locked dimensions leave the atom no way to hold."""
    family, _, value = atom.partition(":")
    if value:
        if family == "functionality":
            funcs = locked.get("functionalities")
            return funcs is not None and value not in funcs
        if family == "constraints":
            if "constrained" in locked:
                return locked["constrained"] != (value == "constrained")
            return False
        if family in locked:
            return locked[family] != value
        return False
    if atom == "state_unknown":
        return locked.get("state_unknown") is False
    if atom == "rich_toolset":
        funcs = locked.get("functionalities")
        return funcs is not None and len(set(funcs)) < catalog.RICH_TOOLSET_MIN
    if atom in _ALIAS_BLOCKERS:
        dim, allowed = _ALIAS_BLOCKERS[atom]
        return dim in locked and locked[dim] not in allowed
    return False


def _atoms_contradict(a: str, b: str) -> bool:
    """Two atoms no profile can satisfy together."""
    fam_a, _, val_a = a.partition(":")
    fam_b, _, val_b = b.partition(":")
    if val_a and val_b and fam_a == fam_b and fam_a != "functionality" and val_a != val_b:
        return True
    for alias, (dim, allowed) in _ALIAS_BLOCKERS.items():
        blocked = {f"{dim}:{v}" for v in catalog.FAMILY_VALUES[dim] if v not in allowed}
        if (a == alias and b in blocked) or (b == alias and a in blocked):
            return True
    return False


def _search(q: DesignQuery, rules: RuleSet) -> list[RankedProfile]:
    import numpy as np

    masks = bitmask.full_space()
    keep = bitmask.lock_selection(masks, q.locked)
    candidates = masks[keep]
    if candidates.size == 0:
        return []
    act = bitmask.activable_matrix(candidates, rules)
    col = {leaf: i for i, leaf in enumerate(catalog.LEAF_ORDER)}
    admissible = act[:, [col[c] for c in sorted(q.develop)]].all(axis=1)
    if q.avoid:
        admissible &= ~act[:, [col[c] for c in sorted(q.avoid)]].any(axis=1)
    survivors = candidates[admissible]
    if survivors.size == 0:
        return []
    support = bitmask.support_totals(survivors, rules, sorted(q.develop))
    func_count = bitmask.functionality_counts(survivors)

    # Rank numerically first; decode and serialize only the rows that can
    # still make the cut (everything tied with the last qualifying key).
    order = np.lexsort((func_count, -support))
    if order.size > q.max_solutions:
        edge = (int(support[order[q.max_solutions - 1]]),
                int(func_count[order[q.max_solutions - 1]]))
        tied = ((support[order] == edge[0]) & (func_count[order] == edge[1]))
        end = int(np.nonzero(tied)[0][-1]) + 1
        order = order[:end]

    domain = q.locked.get("domain", "unplugged")
    ranked = []
    for idx in order.tolist():
        profile = bitmask.decode_mask(int(survivors[idx]), domain)
        score = int(support[idx])
        key = (-score, len(profile.functionalities),
               json.dumps(profile.to_json_dict(), sort_keys=False))
        ranked.append((key, RankedProfile(profile, score)))
    ranked.sort(key=lambda item: item[0])
    return [rp for _, rp in ranked[: q.max_solutions]]


def enumerate_solutions(q: DesignQuery, rules: RuleSet) -> list[CharacteristicProfile]:
    """Admissible profiles ranked by develop support (ties: fewer
    functionalities, then lexicographic serialization); empty when infeasible."""
    validate_query(q)
    return [rp.profile for rp in _search(q, rules)]


def design_constraints(q: DesignQuery, rules: RuleSet) -> DesignSolution:
    """Atom constraints, conflicts and ranked admissible profiles for a query."""
    validate_query(q)

    develop = sorted(q.develop, key=catalog.LEAF_ORDER.index)
    must: dict[str, str] = {}  # atom -> first competency demanding it
    groups: list[tuple[str, ...]] = []
    must_not: dict[str, str] = {}
    for comp in develop:
        rule = rules.rule(comp)
        for atom in catalog.sort_atoms(rule.required):
            must.setdefault(atom, comp)
        for group in rule.required_any:
            ordered = catalog.sort_atoms(group)
            if ordered not in groups:
                groups.append(ordered)
        for atom in catalog.sort_atoms(rule.inhibitors):
            must_not.setdefault(atom, comp)

    conflicts: list[Conflict] = []
    must_atoms = catalog.sort_atoms(must)
    for atom in must_atoms:
        if atom in must_not:
            conflicts.append(Conflict(
                competency_a=must[atom], competency_b=must_not[atom], atom=atom,
                explanation=f"{must[atom]} requires {atom} while {must_not[atom]} forbids it"))
    for i, a in enumerate(must_atoms):
        for b in must_atoms[i + 1:]:
            if _atoms_contradict(a, b):
                conflicts.append(Conflict(
                    competency_a=must[a], competency_b=must[b], atom=a,
                    explanation=f"{a} (for {must[a]}) cannot hold together with "
                                f"{b} (for {must[b]})"))
    for atom in must_atoms:
        if _atom_forced_false(atom, q.locked):
            conflicts.append(Conflict(
                competency_a=must[atom], competency_b=None, atom=atom,
                explanation=f"{must[atom]} requires {atom}, which the locked "
                            f"dimensions rule out"))

    profiles = tuple(_search(q, rules)) if not conflicts else ()
    return DesignSolution(
        must=must_atoms,
        must_not=catalog.sort_atoms(must_not),
        choose_one_of=tuple(groups),
        conflicts=tuple(conflicts),
        profiles=profiles,
        feasible=bool(profiles),
    )


def query_from_json(data) -> tuple[DesignQuery | None, list]:
    """Decode a design query object, collecting schema issues."""
    from .descriptor import ValidationIssue, profile_from_json

    issues: list[ValidationIssue] = []
    if not isinstance(data, dict):
        return None, [ValidationIssue("BadFieldPresence", "query", "expected an object")]
    for key in data:
        if key not in ("develop", "avoid", "locked", "max_solutions"):
            issues.append(ValidationIssue("BadFieldPresence", key, "unknown key"))

    def id_list(key: str) -> frozenset[str]:
        raw = data.get(key, [])
        if not isinstance(raw, list):
            issues.append(ValidationIssue("BadFieldPresence", key, "expected an array"))
            return frozenset()
        out = []
        for i, item in enumerate(raw):
            if item not in catalog.LEAF_ORDER:
                issues.append(ValidationIssue("UnknownEnum", f"{key}[{i}]",
                                              f"{item!r} is not a leaf competency"))
            else:
                out.append(item)
        return frozenset(out)

    develop = id_list("develop")
    avoid = id_list("avoid")
    locked, lock_issues = profile_from_json(data.get("locked", {}), partial=True)
    issues.extend(lock_issues)
    max_solutions = data.get("max_solutions", DEFAULT_MAX_SOLUTIONS)
    if not isinstance(max_solutions, int) or isinstance(max_solutions, bool) or max_solutions < 1:
        issues.append(ValidationIssue("BadFieldPresence", "max_solutions",
                                      "expected an integer >= 1"))
        max_solutions = DEFAULT_MAX_SOLUTIONS
    if not develop:
        issues.append(ValidationIssue("BadFieldPresence", "develop",
                                      "must name at least one competency"))
    if develop & avoid:
        issues.append(ValidationIssue("BadFieldPresence", "avoid",
                                      "must be disjoint from develop"))
    if issues:
        return None, sorted(issues, key=lambda i: (i.path, i.code))
    return DesignQuery(develop=develop, avoid=avoid, locked=locked,
                       max_solutions=max_solutions), []
