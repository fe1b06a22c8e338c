from __future__ import annotations

import json
import random

from ctprof import analyze, diff_profiles, load_ruleset
from ctprof.catalog import LEAF_ORDER
from ctprof.descriptor import CharacteristicProfile
from ctprof.ruleset import ruleset_to_json_dict, strip_supporters

import _oracle

ASSESSMENT_LEAVES = ("algorithm_debugging", "system_state_verification",
                     "constraints_validation", "optimisation", "generalisation")
PROBLEM_SETTING_LEAVES = ("data_collection", "pattern_recognition", "decomposition",
                          "abstraction", "data_representation")

MAXIMAL_PROFILE = CharacteristicProfile(
    domain="virtual",
    functionalities=frozenset(
        {"variables", "operators", "sequences", "repetitions", "conditionals",
         "functions", "parallelism", "events"}),
    resettability="direct",
    observability="total",
    cardinality="one_to_one",
    explicitness="explicit",
    constrained=True,
    representation="manifest_written",
    state_unknown=True,
)


def test_cat_blocks_assessment_on_resettable(profile_of, rules):
    report = analyze(profile_of("cat"), rules)
    for leaf in ASSESSMENT_LEAVES:
        result = report.results[leaf]
        assert result.status == "blocked"
        missing = {a for r in result.reasons if r.kind == "missing_required" for a in r.atoms}
        assert "resettable" in missing


def test_cat_blocks_missing_functionalities(profile_of, rules):
    report = analyze(profile_of("cat"), rules)
    for leaf in ("conditionals", "events"):
        result = report.results[leaf]
        assert result.status == "blocked"
        assert result.reasons == tuple([type(result.reasons[0])(
            "missing_required", (f"functionality:{leaf}",))])


def test_cat_activates_problem_setting_and_present_algorithm(profile_of, rules):
    activable = analyze(profile_of("cat"), rules).activable()
    assert set(PROBLEM_SETTING_LEAVES) <= activable
    assert {"variables", "operators", "sequences", "repetitions",
            "functions", "parallelism"} <= activable
    assert len(activable) == 11


def test_maximal_profile_activates_everything(rules):
    report = analyze(MAXIMAL_PROFILE, rules)
    assert report.activable() == frozenset(LEAF_ORDER)


def test_tps_contrast(profile_of, rules):
    board = analyze(profile_of("tps_board"), rules).activable()
    assert not board & set(ASSESSMENT_LEAVES)
    pencil = analyze(profile_of("tps_pencil"), rules)
    activable = pencil.activable()
    assert {"algorithm_debugging", "constraints_validation",
            "optimisation", "generalisation"} <= activable
    assert pencil.results["system_state_verification"].status == "blocked"
    missing = {a for r in pencil.results["system_state_verification"].reasons
               for a in r.atoms}
    assert missing == {"state_unknown"}


def test_report_invariants(corpus, rules):
    for entry in corpus.entries:
        report = analyze(entry.profile, rules)
        assert set(report.results) == set(LEAF_ORDER)
        for leaf, result in report.results.items():
            assert (result.status == "activable") == (not result.reasons)
            assert result.support_score == len(result.supporters_present)
            assert set(result.supporters_present) <= rules.rule(leaf).supporters


def test_report_json_key_order(profile_of, rules):
    doc = analyze(profile_of("cat"), rules).to_json_dict()
    assert list(doc["results"]) == list(LEAF_ORDER)
    assert set(doc) == {"profile", "ruleset", "results"}


def test_supporters_reported_for_blocked_leaves(profile_of, rules):
    report = analyze(profile_of("cat"), rules)
    blocked = report.results["optimisation"]
    assert blocked.status == "blocked"
    assert blocked.supporters_present == ("observable", "rich_toolset")


def test_analyze_matches_oracle_on_corpus(corpus, rules):
    for entry in corpus.entries:
        report = analyze(entry.profile, rules)
        assert report.activable() == _oracle.activable_set(entry.profile, rules)
        for leaf, result in report.results.items():
            rule = rules.rule(leaf)
            missing = {a for r in result.reasons if r.kind == "missing_required"
                       for a in r.atoms}
            assert missing == _oracle.missing_required(entry.profile, rule)
            assert set(result.supporters_present) == _oracle.supporters_present(
                entry.profile, rule)


def test_inhibited_reasons_with_custom_ruleset(profile_of, rules):
    doc = ruleset_to_json_dict(rules)
    doc["rules"]["decomposition"]["inhibitors"] = ["state_unknown", "constraints:constrained"]
    doc["rules"]["decomposition"]["supporters"] = ["manifest", "rich_toolset"]
    custom = load_ruleset(json.dumps(doc))
    inhibited_profile = MAXIMAL_PROFILE
    report = analyze(inhibited_profile, custom)
    result = report.results["decomposition"]
    assert result.status == "blocked"
    assert [(r.kind, r.atoms) for r in result.reasons] == [
        ("inhibited", ("constraints:constrained",)),
        ("inhibited", ("state_unknown",)),
    ]
    assert _oracle.rule_activable(inhibited_profile, custom.rule("decomposition")) is False


def _random_profile(rng: random.Random, funcs=None) -> CharacteristicProfile:
    return CharacteristicProfile(
        domain=rng.choice(("unplugged", "robotic", "virtual")),
        functionalities=funcs if funcs is not None else frozenset(
            f for f in _oracle.FUNCTIONALITY_NAMES if rng.random() < 0.5),
        resettability=rng.choice(_oracle.RESETTABILITY),
        observability=rng.choice(_oracle.OBSERVABILITY),
        cardinality=rng.choice(_oracle.CARDINALITY),
        explicitness=rng.choice(_oracle.EXPLICITNESS),
        constrained=rng.random() < 0.5,
        representation=rng.choice(_oracle.REPRESENTATION),
        state_unknown=rng.random() < 0.5,
    )


def test_requirement_monotonicity_random_pairs(rules):
    """Growing a profile's true atoms never shrinks the activable set under
    the default ruleset (whose inhibitor slots are empty)."""
    rng = random.Random(40)
    for _ in range(300):
        smaller = _random_profile(rng)
        grown_funcs = smaller.functionalities | frozenset(
            f for f in _oracle.FUNCTIONALITY_NAMES if rng.random() < 0.3)
        bigger = CharacteristicProfile(
            domain=smaller.domain,
            functionalities=grown_funcs,
            resettability=smaller.resettability,
            observability=smaller.observability,
            cardinality=smaller.cardinality,
            explicitness=smaller.explicitness,
            constrained=smaller.constrained,
            representation=smaller.representation,
            state_unknown=smaller.state_unknown or rng.random() < 0.3,
        )
        assert analyze(smaller, rules).activable() <= analyze(bigger, rules).activable()


def test_support_never_gates_random_sample(rules):
    rng = random.Random(41)
    stripped = strip_supporters(rules)
    for _ in range(300):
        profile = _random_profile(rng)
        full = analyze(profile, rules)
        bare = analyze(profile, stripped)
        for leaf in LEAF_ORDER:
            assert full.results[leaf].status == bare.results[leaf].status
            assert bare.results[leaf].support_score == 0


def test_diff_reflexive(profile_of, rules):
    diff = diff_profiles(profile_of("cat"), profile_of("cat"), rules)
    assert diff.changed == ()
    assert diff.functionality_added == () and diff.functionality_removed == ()
    assert diff.competencies_gained == () and diff.competencies_lost == ()


def test_diff_cat_variants(profile_of, virtual_cat_profile, rules):
    diff = diff_profiles(profile_of("cat"), virtual_cat_profile, rules)
    assert [(c.dimension, c.before, c.after) for c in diff.changed] == [
        ("resettability", "none", "indirect"),
        ("constrained", False, True),
        ("representation", "manifest_non_written", "manifest_written"),
    ]
    assert "algorithm_debugging" in diff.competencies_gained
    assert diff.competencies_lost == ()
    assert not set(diff.competencies_gained) & set(diff.competencies_lost)


def test_diff_antisymmetry_random(rules):
    rng = random.Random(42)
    for _ in range(100):
        a, b = _random_profile(rng), _random_profile(rng)
        forward = diff_profiles(a, b, rules)
        backward = diff_profiles(b, a, rules)
        assert [(c.dimension, c.before, c.after) for c in forward.changed] == [
            (c.dimension, c.after, c.before) for c in backward.changed]
        assert forward.competencies_gained == backward.competencies_lost
        assert forward.competencies_lost == backward.competencies_gained
        assert forward.functionality_added == backward.functionality_removed
