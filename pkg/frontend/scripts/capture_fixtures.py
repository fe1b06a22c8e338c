"""Capture real engine responses as JSON fixtures for the studio tests.

Requires the ctprof package to be installed. Rerun after engine changes:

    python3 frontend/scripts/capture_fixtures.py
"""

import json
from pathlib import Path

from ctprof import analyze, default_ruleset, load_corpus
from ctprof.catalog import catalog_json
from ctprof.descriptor import CharacteristicProfile, descriptor_to_json_dict
from ctprof.designer import DesignQuery, design_constraints
from ctprof.paths import fixtures_dir

OUT = Path(__file__).parent.parent / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    (OUT / name).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    rules = default_ruleset()
    corpus = load_corpus(fixtures_dir())
    entries = {e.name: e for e in corpus.entries}

    dump("catalog.json", catalog_json())
    dump("fixtures.json", {"fixtures": [
        {"name": e.name, "group": e.group, "domain": e.profile.domain}
        for e in sorted(corpus.entries, key=lambda e: e.name)
    ]})

    cat = entries["cat"]
    dump("fixture_cat.json", {
        "name": cat.name,
        "group": cat.group,
        "domain": cat.profile.domain,
        "descriptor": descriptor_to_json_dict(cat.descriptor),
        "profile": cat.profile.to_json_dict(),
    })

    cat_report = analyze(cat.profile, rules)
    dump("analyze_cat.json", cat_report.to_json_dict())

    indirect = CharacteristicProfile(**{**cat.profile.__dict__, "resettability": "indirect"})
    dump("analyze_cat_indirect.json", analyze(indirect, rules).to_json_dict())

    # Walkthrough: redesign the loaded activity so it also develops debugging,
    # constraint validation and optimisation; everything else stays locked.
    develop = frozenset(cat_report.activable()) | {
        "algorithm_debugging", "constraints_validation", "optimisation"}
    query = DesignQuery(develop=develop, locked={
        "functionalities": cat.profile.functionalities,
        "observability": cat.profile.observability,
        "cardinality": cat.profile.cardinality,
        "explicitness": cat.profile.explicitness,
        "state_unknown": cat.profile.state_unknown,
        "domain": cat.profile.domain,
    })
    solution = design_constraints(query, rules)
    dump("design_walkthrough.json", solution.to_json_dict())
    dump("design_walkthrough_query.json", {
        "develop": sorted(develop),
        "avoid": [],
        "locked": {
            "functionalities": sorted(cat.profile.functionalities),
            "observability": cat.profile.observability,
            "cardinality": cat.profile.cardinality,
            "explicitness": cat.profile.explicitness,
            "state_unknown": cat.profile.state_unknown,
            "domain": cat.profile.domain,
        },
        "max_solutions": 20,
    })

    for index, ranked in enumerate(solution.profiles):
        profile = CharacteristicProfile(
            domain=ranked.profile.domain,
            functionalities=ranked.profile.functionalities,
            resettability=ranked.profile.resettability,
            observability=ranked.profile.observability,
            cardinality=ranked.profile.cardinality,
            explicitness=ranked.profile.explicitness,
            constrained=ranked.profile.constrained,
            representation=ranked.profile.representation,
            state_unknown=ranked.profile.state_unknown,
        )
        dump(f"analyze_candidate_{index}.json", analyze(profile, rules).to_json_dict())

    print(f"captured fixtures into {OUT}")


if __name__ == "__main__":
    main()
