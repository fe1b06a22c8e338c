from __future__ import annotations

import json
import time

import pytest

from ctprof import analyze, enumerate_solutions, load_ruleset
from ctprof.designer import DesignQuery, design_constraints
from ctprof.errors import EmptyDevelopSet, InvalidDesignQuery, UnknownCompetency
from ctprof.ruleset import ruleset_to_json_dict

import _oracle


def test_debugging_constraints(rules):
    solution = design_constraints(DesignQuery(develop=frozenset({"algorithm_debugging"})), rules)
    assert set(solution.must) == {"resettable", "representation:manifest_written"}
    assert solution.must_not == ()
    assert solution.feasible is True
    assert solution.conflicts == ()
    assert len(solution.profiles) == 20  # default max_solutions


def test_empty_develop_rejected(rules):
    with pytest.raises(EmptyDevelopSet):
        design_constraints(DesignQuery(develop=frozenset()), rules)


def test_overlapping_sets_rejected(rules):
    with pytest.raises(InvalidDesignQuery):
        design_constraints(DesignQuery(develop=frozenset({"variables"}),
                                       avoid=frozenset({"variables"})), rules)


def test_unknown_competency_rejected(rules):
    with pytest.raises(UnknownCompetency):
        enumerate_solutions(DesignQuery(develop=frozenset({"juggling"})), rules)


def test_bad_lock_rejected(rules):
    with pytest.raises(InvalidDesignQuery):
        enumerate_solutions(
            DesignQuery(develop=frozenset({"variables"}), locked={"resettability": "maybe"}),
            rules)


def test_state_lock_makes_verification_infeasible(rules, full_profiles, oracle_acts):
    query = DesignQuery(develop=frozenset({"system_state_verification"}),
                        locked={"state_unknown": False})
    solution = design_constraints(query, rules)
    assert solution.feasible is False
    assert solution.profiles == ()
    assert any(c.atom == "state_unknown" for c in solution.conflicts)
    # independent check: no enumerable profile under the lock develops it
    admissible = [
        p for p, act in zip(full_profiles, oracle_acts)
        if "system_state_verification" in act and _oracle.matches_lock(p, query.locked)
    ]
    assert admissible == []


def test_requirement_contradiction_is_reported(rules):
    doc = ruleset_to_json_dict(rules)
    doc["rules"]["variables"]["required"] = ["functionality:variables", "observability:none"]
    doc["rules"]["variables"]["supporters"] = []
    doc["rules"]["operators"]["required"] = ["functionality:operators", "observable"]
    doc["rules"]["operators"]["supporters"] = []
    custom = load_ruleset(json.dumps(doc))
    solution = design_constraints(
        DesignQuery(develop=frozenset({"variables", "operators"})), custom)
    assert solution.feasible is False
    assert any({c.competency_a, c.competency_b} == {"variables", "operators"}
               for c in solution.conflicts)


def test_must_vs_inhibitor_conflict(rules):
    doc = ruleset_to_json_dict(rules)
    doc["rules"]["variables"]["inhibitors"] = ["resettable"]
    doc["rules"]["variables"]["supporters"] = []
    custom = load_ruleset(json.dumps(doc))
    solution = design_constraints(
        DesignQuery(develop=frozenset({"variables", "optimisation"})), custom)
    assert solution.feasible is False
    assert any(c.atom == "resettable" and c.competency_b == "variables"
               for c in solution.conflicts)


def test_ranking_contract(rules):
    profiles = enumerate_solutions(DesignQuery(develop=frozenset({"variables"})), rules)
    assert profiles
    assert all("variables" in p.functionalities for p in profiles)
    solution = design_constraints(DesignQuery(develop=frozenset({"variables"})), rules)
    scores = [rp.support_total for rp in solution.profiles]
    assert scores == sorted(scores, reverse=True)


def test_filter_keeps_required_functionalities(rules, full_profiles, oracle_acts):
    query = DesignQuery(develop=frozenset({"events", "parallelism"}), max_solutions=200)
    profiles = enumerate_solutions(query, rules)
    assert profiles
    assert all({"events", "parallelism"} <= p.functionalities for p in profiles)
    expected = sum(
        1 for p, act in zip(full_profiles, oracle_acts)
        if {"events", "parallelism"} <= act
    )
    full = enumerate_solutions(
        DesignQuery(develop=frozenset({"events", "parallelism"}), max_solutions=10 ** 6), rules)
    assert len(full) == expected


def test_soundness_on_sample_queries(rules):
    queries = [
        DesignQuery(develop=frozenset({"generalisation"}),
                    avoid=frozenset({"conditionals"})),
        DesignQuery(develop=frozenset({"system_state_verification", "repetitions"})),
        DesignQuery(develop=frozenset({"constraints_validation"}),
                    avoid=frozenset({"events", "optimisation"})),
        DesignQuery(develop=frozenset({"decomposition"}),
                    locked={"functionalities": frozenset({"functions"})}),
    ]
    for query in queries:
        for profile in enumerate_solutions(query, rules):
            activable = analyze(profile, rules).activable()
            assert query.develop <= activable
            assert not query.avoid & activable


def test_avoid_optimisation_blocks_resettable(rules):
    query = DesignQuery(develop=frozenset({"variables"}),
                        avoid=frozenset({"optimisation"}), max_solutions=50)
    for profile in enumerate_solutions(query, rules):
        assert profile.resettability == "none"


def test_determinism_byte_identical(rules):
    query = DesignQuery(develop=frozenset({"algorithm_debugging", "repetitions"}),
                        avoid=frozenset({"events"}))
    first = design_constraints(query, rules).to_json_dict()
    second = design_constraints(query, rules).to_json_dict()
    assert json.dumps(first) == json.dumps(second)


def test_max_solutions_truncates(rules):
    query = DesignQuery(develop=frozenset({"variables"}), max_solutions=3)
    assert len(enumerate_solutions(query, rules)) == 3


def test_wide_query_completes_within_a_second(rules):
    # develop={variables} leaves ~half the space admissible, the worst case
    query = DesignQuery(develop=frozenset({"variables"}))
    enumerate_solutions(query, rules)  # warm the enumeration cache
    started = time.perf_counter()
    enumerate_solutions(query, rules)
    assert time.perf_counter() - started < 1.0


def test_locked_domain_annotates_profiles(rules):
    query = DesignQuery(develop=frozenset({"variables"}), locked={"domain": "robotic"},
                        max_solutions=5)
    assert all(p.domain == "robotic" for p in enumerate_solutions(query, rules))


def test_cat_redesign_query(profile_of, rules):
    cat = profile_of("cat")
    develop = frozenset(analyze(cat, rules).activable()) | {"algorithm_debugging", "optimisation"}
    query = DesignQuery(
        develop=develop,
        locked={
            "functionalities": cat.functionalities,
            "observability": cat.observability,
            "cardinality": cat.cardinality,
            "explicitness": cat.explicitness,
            "state_unknown": cat.state_unknown,
            "domain": cat.domain,
        },
    )
    solution = design_constraints(query, rules)
    assert solution.feasible
    assert len(solution.profiles) == 4
    for rp in solution.profiles:
        assert rp.profile.resettability in ("direct", "indirect")
        assert rp.profile.representation == "manifest_written"
        assert rp.profile.functionalities == cat.functionalities


def test_matches_brute_force_on_fixed_queries(rules, full_profiles, oracle_acts):
    queries = [
        DesignQuery(develop=frozenset({"algorithm_debugging"}), max_solutions=10),
        DesignQuery(develop=frozenset({"generalisation", "events"}),
                    avoid=frozenset({"conditionals"}), max_solutions=7),
        DesignQuery(develop=frozenset({"decomposition"}),
                    locked={"resettability": "none", "representation": "latent"},
                    max_solutions=12),
    ]
    for query in queries:
        assert enumerate_solutions(query, rules) == _oracle.brute_force_solutions(
            query, rules, full_profiles, oracle_acts)
