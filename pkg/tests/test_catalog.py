from __future__ import annotations

import pytest

from ctprof import atom_vocabulary, competency_tree, eval_atom
from ctprof.catalog import (
    ALIAS_ATOMS,
    FAMILY_VALUES,
    FUNCTIONALITIES,
    LEAF_ORDER,
    profile_atoms,
    sort_atoms,
)
from ctprof.errors import UnknownAtom

import _oracle

EXPECTED_ROOTS = {"problem_setting", "algorithm", "assessment"}
EXPECTED_LEAVES = {
    "data_collection", "pattern_recognition", "decomposition", "abstraction",
    "data_representation",
    "variables", "operators", "sequences", "repetitions", "conditionals",
    "functions", "parallelism", "events",
    "algorithm_debugging", "system_state_verification", "constraints_validation",
    "optimisation", "generalisation",
}


def test_tree_roots_and_leaves():
    tree = competency_tree()
    assert set(tree.roots()) == EXPECTED_ROOTS
    assert set(tree.leaves()) == EXPECTED_LEAVES
    assert len(tree.leaves()) == 18  # 5 + 8 + 5
    assert set(LEAF_ORDER) == EXPECTED_LEAVES


def test_tree_intermediates():
    tree = competency_tree()
    assert tree.parent("analysing") == "problem_setting"
    assert tree.parent("modelling") == "problem_setting"
    assert tree.parent("data_representation") == "problem_setting"
    assert tree.parent("control_structures") == "algorithm"
    assert tree.parent("correctness") == "assessment"
    assert tree.parent("effectiveness") == "assessment"
    assert tree.parent("repetitions") == "control_structures"
    assert tree.definition("repetitions") == "Iterative agent actions."


def test_tree_acyclic_single_parent():
    tree = competency_tree()
    ids = [n.id for n in tree.nodes]
    assert len(ids) == len(set(ids))
    for node in tree.nodes:
        seen = {node.id}
        current = node
        while current.parent is not None:
            assert current.parent not in seen, "cycle detected"
            seen.add(current.parent)
            current = tree.node(current.parent)
        assert current.id in EXPECTED_ROOTS


def test_tree_referentially_transparent():
    assert competency_tree() == competency_tree()
    assert competency_tree().nodes == competency_tree().nodes


def test_vocabulary_contents():
    atoms = atom_vocabulary()
    names = [a.name for a in atoms]
    assert "functionality:events" in names
    assert "functionality:parallelism" in names
    assert sum(1 for a in atoms if a.family == "resettability") == 3
    aliases = [a for a in atoms if a.alias]
    assert [a.name for a in aliases] == list(ALIAS_ATOMS)
    assert all(a.family is None for a in aliases)
    base = [a for a in atoms if not a.alias]
    assert len(base) == 24 and len(atoms) == 29
    assert "resettable" not in {a.name for a in base}


def test_vocabulary_order_is_fixed():
    names = [a.name for a in atom_vocabulary()]
    expected = (
        [f"functionality:{f}" for f in FUNCTIONALITIES]
        + [f"resettability:{v}" for v in FAMILY_VALUES["resettability"]]
        + [f"observability:{v}" for v in FAMILY_VALUES["observability"]]
        + [f"cardinality:{v}" for v in FAMILY_VALUES["cardinality"]]
        + [f"explicitness:{v}" for v in FAMILY_VALUES["explicitness"]]
        + [f"constraints:{v}" for v in FAMILY_VALUES["constraints"]]
        + [f"representation:{v}" for v in FAMILY_VALUES["representation"]]
        + list(ALIAS_ATOMS)
    )
    assert names == expected
    assert sort_atoms({"rich_toolset", "functionality:events", "resettability:direct"}) == (
        "functionality:events", "resettability:direct", "rich_toolset")


def test_eval_atom_cat_profile(profile_of):
    cat = profile_of("cat")
    assert eval_atom(cat, "resettable") is False
    assert eval_atom(cat, "resettability:none") is True
    assert eval_atom(cat, "observable") is True
    assert eval_atom(cat, "rich_toolset") is True  # 6 functionalities
    assert eval_atom(cat, "manifest") is True
    assert eval_atom(cat, "representation:manifest_written") is False


def test_eval_atom_virtual_cat(virtual_cat_profile):
    assert eval_atom(virtual_cat_profile, "representation:manifest_written") is True
    assert eval_atom(virtual_cat_profile, "resettable") is True
    assert eval_atom(virtual_cat_profile, "constraints:constrained") is True


def test_eval_atom_identity_on_stored_values(corpus):
    for entry in corpus.entries:
        p = entry.profile
        assert eval_atom(p, f"resettability:{p.resettability}")
        assert eval_atom(p, f"observability:{p.observability}")
        assert eval_atom(p, f"cardinality:{p.cardinality}")
        assert eval_atom(p, f"explicitness:{p.explicitness}")
        assert eval_atom(p, f"representation:{p.representation}")
        for f in p.functionalities:
            assert eval_atom(p, f"functionality:{f}")


def test_eval_atom_rejects_unknown(profile_of):
    with pytest.raises(UnknownAtom):
        eval_atom(profile_of("cat"), "functionality:loops")


def test_families_and_aliases_over_full_space(full_profiles):
    """Exactly one base atom per non-functionality family, and every alias
    matches its definition, on all 165,888 enumerable profiles."""
    exclusive = {
        family: {f"{family}:{v}" for v in values}
        for family, values in FAMILY_VALUES.items()
        if family != "functionality"
    }
    for profile in full_profiles:
        atoms = profile_atoms(profile)
        for family, family_atoms in exclusive.items():
            assert len(atoms & family_atoms) == 1
        assert ("resettable" in atoms) == (
            "resettability:direct" in atoms or "resettability:indirect" in atoms)
        assert ("observable" in atoms) == (
            "observability:total" in atoms or "observability:partial" in atoms)
        assert ("manifest" in atoms) == (
            "representation:manifest_written" in atoms
            or "representation:manifest_non_written" in atoms)
        assert ("state_unknown" in atoms) == profile.state_unknown
        assert ("rich_toolset" in atoms) == (len(profile.functionalities) >= 5)


def test_profile_atoms_match_literal_oracle(full_profiles):
    sample = full_profiles[:: 257]  # spread across the space
    for profile in sample:
        assert profile_atoms(profile) == _oracle.true_atoms(profile)
