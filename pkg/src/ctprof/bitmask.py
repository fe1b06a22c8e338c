"""Vectorized evaluation over the full enumerable profile space.

Profiles are packed into uint32 bitmasks (one bit per vocabulary atom,
alias bits included), so rule clauses become bitwise operations over the
whole 165,888-profile space at once. The designer's enumeration and the
whole-space property checks run on this kernel; per-profile analysis in
``analyzer`` stays an independent set-based path.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import catalog
from .descriptor import CharacteristicProfile
from .ruleset import RuleSet

_BIT = {name: np.uint32(1) << np.uint32(i) for name, i in catalog.ATOM_ORDER.items()}
_FUNC_FIELD = np.uint32((1 << len(catalog.FUNCTIONALITIES)) - 1)

# Scalar dimensions enumerated alongside the functionality powerset.
_SCALAR_FAMILIES = ("resettability", "observability", "cardinality",
                    "explicitness", "constraints", "representation")

SPACE_SIZE = (2 ** len(catalog.FUNCTIONALITIES)
              * 3 * 3 * 3 * 2 * 2 * 3 * 2)  # functionalities x families x state_unknown


def atoms_mask(atoms) -> int:
    out = np.uint32(0)
    for atom in atoms:
        out |= _BIT[atom]
    return int(out)


def profile_mask(profile: CharacteristicProfile) -> int:
    return atoms_mask(catalog.profile_atoms(profile))


def _combo_mask(reset: str, obs: str, card: str, expl: str, constr: str,
                repr_: str, state_unknown: bool) -> int:
    atoms = [
        f"resettability:{reset}",
        f"observability:{obs}",
        f"cardinality:{card}",
        f"explicitness:{expl}",
        f"constraints:{constr}",
        f"representation:{repr_}",
    ]
    if reset in ("direct", "indirect"):
        atoms.append("resettable")
    if obs in ("total", "partial"):
        atoms.append("observable")
    if repr_ in ("manifest_written", "manifest_non_written"):
        atoms.append("manifest")
    if state_unknown:
        atoms.append("state_unknown")
    return atoms_mask(atoms)


@lru_cache(maxsize=1)
def full_space() -> np.ndarray:
    """All syntactically valid profiles as uint32 masks (fixed order)."""
    funcs = np.arange(2 ** len(catalog.FUNCTIONALITIES), dtype=np.uint32)
    rich = np.where(np.bitwise_count(funcs) >= catalog.RICH_TOOLSET_MIN,
                    _BIT["rich_toolset"], np.uint32(0))
    func_masks = funcs | rich

    combos = [
        _combo_mask(reset, obs, card, expl, constr, repr_, state_unknown)
        for reset in catalog.FAMILY_VALUES["resettability"]
        for obs in catalog.FAMILY_VALUES["observability"]
        for card in catalog.FAMILY_VALUES["cardinality"]
        for expl in catalog.FAMILY_VALUES["explicitness"]
        for constr in catalog.FAMILY_VALUES["constraints"]
        for repr_ in catalog.FAMILY_VALUES["representation"]
        for state_unknown in (False, True)
    ]
    combo_masks = np.array(combos, dtype=np.uint32)
    masks = (combo_masks[:, None] | func_masks[None, :]).ravel()
    masks.setflags(write=False)
    return masks


def decode_mask(mask: int, domain: str = "unplugged") -> CharacteristicProfile:
    """Inverse of profile_mask for enumerated candidates; domain is annotation."""
    def family_value(family: str) -> str:
        for value in catalog.FAMILY_VALUES[family]:
            if mask & _BIT[f"{family}:{value}"]:
                return value
        raise ValueError(f"mask {mask:#x} has no {family} bit")

    return CharacteristicProfile(
        domain=domain,
        functionalities=frozenset(
            f for f in catalog.FUNCTIONALITIES if mask & _BIT[f"functionality:{f}"]),
        resettability=family_value("resettability"),
        observability=family_value("observability"),
        cardinality=family_value("cardinality"),
        explicitness=family_value("explicitness"),
        constrained=bool(mask & _BIT["constraints:constrained"]),
        representation=family_value("representation"),
        state_unknown=bool(mask & _BIT["state_unknown"]),
    )


def lock_selection(masks: np.ndarray, locked: dict) -> np.ndarray:
    """Boolean selection of profiles matching the locked dimensions."""
    keep = np.ones(masks.shape, dtype=bool)
    for dim, value in locked.items():
        if dim == "domain":
            continue  # no atom reads the domain
        if dim == "functionalities":
            want = np.uint32(atoms_mask(f"functionality:{f}" for f in value))
            keep &= (masks & _FUNC_FIELD) == want
        elif dim == "constrained":
            bit = _BIT["constraints:constrained"]
            keep &= ((masks & bit) != 0) == bool(value)
        elif dim == "state_unknown":
            bit = _BIT["state_unknown"]
            keep &= ((masks & bit) != 0) == bool(value)
        else:
            keep &= (masks & _BIT[f"{dim}:{value}"]) != 0
    return keep


def activable_matrix(masks: np.ndarray, rules: RuleSet) -> np.ndarray:
    """(N, 18) booleans: column j is activability of LEAF_ORDER[j]."""
    out = np.empty((masks.shape[0], len(catalog.LEAF_ORDER)), dtype=bool)
    for j, leaf in enumerate(catalog.LEAF_ORDER):
        rule = rules.rule(leaf)
        req = np.uint32(atoms_mask(rule.required))
        ok = (masks & req) == req
        for group in rule.required_any:
            ok &= (masks & np.uint32(atoms_mask(group))) != 0
        inh = np.uint32(atoms_mask(rule.inhibitors))
        if inh:
            ok &= (masks & inh) == 0
        out[:, j] = ok
    return out


def support_totals(masks: np.ndarray, rules: RuleSet, develop) -> np.ndarray:
    """Per profile, total supporter count over the develop leaves."""
    total = np.zeros(masks.shape, dtype=np.int64)
    for leaf in develop:
        sup = np.uint32(atoms_mask(rules.rule(leaf).supporters))
        if sup:
            total += np.bitwise_count(masks & sup)
    return total


def functionality_counts(masks: np.ndarray) -> np.ndarray:
    """Per profile, how many functionalities are present."""
    return np.bitwise_count(masks & _FUNC_FIELD).astype(np.int64)
