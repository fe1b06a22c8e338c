"""Profiling engine for educational computational thinking activities.

Parses structured activity descriptors, infers which competencies an
activity can develop (forward analysis), computes which characteristics an
activity must or must not have to target chosen competencies (backward
design), and aggregates corpora into per-domain taxonomy tables.
"""

from .analyzer import AnalysisReport, ProfileDiff, analyze, diff_profiles
from .catalog import atom_vocabulary, competency_tree, eval_atom
from .corpus import (
    Corpus,
    TaxonomyTable,
    characteristics_taxonomy,
    competencies_taxonomy,
    load_corpus,
)
from .descriptor import (
    CharacteristicProfile,
    Descriptor,
    ValidationIssue,
    classify_task,
    derive_characteristics,
    parse_descriptor,
    serialize_descriptor,
    validate_descriptor,
)
from .designer import DesignQuery, DesignSolution, design_constraints, enumerate_solutions
from .ruleset import RuleSet, default_ruleset, load_ruleset, serialize_ruleset

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CharacteristicProfile",
    "Corpus",
    "DesignQuery",
    "DesignSolution",
    "Descriptor",
    "ProfileDiff",
    "RuleSet",
    "TaxonomyTable",
    "ValidationIssue",
    "analyze",
    "atom_vocabulary",
    "characteristics_taxonomy",
    "classify_task",
    "competencies_taxonomy",
    "competency_tree",
    "default_ruleset",
    "derive_characteristics",
    "design_constraints",
    "diff_profiles",
    "enumerate_solutions",
    "eval_atom",
    "load_corpus",
    "load_ruleset",
    "parse_descriptor",
    "serialize_descriptor",
    "serialize_ruleset",
    "validate_descriptor",
]
