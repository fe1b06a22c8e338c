from __future__ import annotations

import time

import pytest

from ctprof import default_ruleset, load_corpus
from ctprof.paths import data_root, fixtures_dir

import _oracle

# Cumulative wall time of the heavy whole-space checks (budgeted by the
# acceptance suite).
HEAVY_TIMINGS: dict[str, float] = {}


def record_time(key: str, started: float) -> None:
    HEAVY_TIMINGS[key] = HEAVY_TIMINGS.get(key, 0.0) + (time.perf_counter() - started)


@pytest.fixture(scope="session")
def rules():
    return default_ruleset()


@pytest.fixture(scope="session")
def corpus():
    return load_corpus(fixtures_dir())


@pytest.fixture(scope="session")
def profile_of(corpus):
    by_name = {e.name: e.profile for e in corpus.entries}
    return by_name.__getitem__


@pytest.fixture(scope="session")
def virtual_cat_profile():
    from ctprof import derive_characteristics, parse_descriptor

    text = (data_root() / "designs" / "virtual_cat.ctp.json").read_text("utf-8")
    return derive_characteristics(parse_descriptor(text))


@pytest.fixture(scope="session")
def full_profiles():
    started = time.perf_counter()
    profiles = list(_oracle.enumerate_profiles())
    record_time("enumerate_space", started)
    assert len(profiles) == _oracle.SPACE_SIZE
    return profiles


@pytest.fixture(scope="session")
def oracle_acts(full_profiles, rules):
    started = time.perf_counter()
    acts = _oracle.activable_sets_fast(full_profiles, rules)
    record_time("oracle_acts", started)
    return acts


@pytest.fixture(scope="session")
def oracle_act_bits(oracle_acts, rules):
    started = time.perf_counter()
    bits = _oracle.acts_to_bits(oracle_acts, sorted(rules.rules))
    record_time("oracle_acts", started)
    return bits
