"""Fixed vocabularies: the competency hierarchy and the atom language.

Everything here is static data. The competency tree has 3 roots, 5
intermediate nodes and 18 leaves; the atom vocabulary has 24 base atoms
(one per characteristic value, plus the 8 independent functionality flags)
and 5 alias atoms derived from them. Rules are written over this vocabulary
and evaluated against characteristic profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import UnknownAtom

if TYPE_CHECKING:
    from .descriptor import CharacteristicProfile


# ---------------------------------------------------------------------------
# Characteristic families
# ---------------------------------------------------------------------------

FUNCTIONALITIES = (
    "variables",
    "operators",
    "sequences",
    "repetitions",
    "conditionals",
    "functions",
    "parallelism",
    "events",
)

DOMAINS = ("unplugged", "robotic", "virtual")

FAMILY_VALUES: dict[str, tuple[str, ...]] = {
    "functionality": FUNCTIONALITIES,
    "resettability": ("direct", "indirect", "none"),
    "observability": ("total", "partial", "none"),
    "cardinality": ("one_to_one", "many_to_one", "many_to_many"),
    "explicitness": ("explicit", "implicit"),
    "constraints": ("constrained", "unconstrained"),
    "representation": ("manifest_written", "manifest_non_written", "latent"),
}

ALIAS_ATOMS = ("resettable", "observable", "manifest", "state_unknown", "rich_toolset")

# A toolset counts as "rich" from this many functionalities up.
RICH_TOOLSET_MIN = 5


@dataclass(frozen=True)
class Atom:
    """One vocabulary entry. ``family`` is None for alias atoms."""

    name: str
    family: str | None
    alias: bool


def _build_vocabulary() -> tuple[Atom, ...]:
    atoms = []
    for family, values in FAMILY_VALUES.items():
        for value in values:
            atoms.append(Atom(f"{family}:{value}", family, alias=False))
    for name in ALIAS_ATOMS:
        atoms.append(Atom(name, None, alias=True))
    return tuple(atoms)


_VOCABULARY = _build_vocabulary()
_ATOM_NAMES = tuple(a.name for a in _VOCABULARY)
_ATOM_SET = frozenset(_ATOM_NAMES)

# Fixed, documented order: functionality atoms first (vocabulary order of the
# eight names), then resettability, observability, cardinality, explicitness,
# constraints, representation values, then the five aliases.
ATOM_ORDER: dict[str, int] = {name: i for i, name in enumerate(_ATOM_NAMES)}


def atom_vocabulary() -> tuple[Atom, ...]:
    """All base atoms plus the five alias atoms, in the fixed order."""
    return _VOCABULARY


def is_atom(name: str) -> bool:
    return name in _ATOM_SET


def sort_atoms(names) -> tuple[str, ...]:
    """Order atom names canonically (vocabulary order)."""
    return tuple(sorted(names, key=ATOM_ORDER.__getitem__))


def profile_atoms(profile: "CharacteristicProfile") -> frozenset[str]:
    """The set of vocabulary atoms that hold for a fully resolved profile."""
    atoms = {f"functionality:{f}" for f in profile.functionalities}
    atoms.add(f"resettability:{profile.resettability}")
    atoms.add(f"observability:{profile.observability}")
    atoms.add(f"cardinality:{profile.cardinality}")
    atoms.add(f"explicitness:{profile.explicitness}")
    atoms.add("constraints:constrained" if profile.constrained else "constraints:unconstrained")
    atoms.add(f"representation:{profile.representation}")
    if profile.resettability in ("direct", "indirect"):
        atoms.add("resettable")
    if profile.observability in ("total", "partial"):
        atoms.add("observable")
    if profile.representation in ("manifest_written", "manifest_non_written"):
        atoms.add("manifest")
    if profile.state_unknown:
        atoms.add("state_unknown")
    if len(profile.functionalities) >= RICH_TOOLSET_MIN:
        atoms.add("rich_toolset")
    return frozenset(atoms)


def eval_atom(profile: "CharacteristicProfile", atom: str) -> bool:
    """Evaluate one atom against a profile. Total over the vocabulary."""
    if atom not in _ATOM_SET:
        raise UnknownAtom(f"unknown atom {atom!r}")
    return atom in profile_atoms(profile)


# ---------------------------------------------------------------------------
# Competency tree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompetencyNode:
    id: str
    label: str
    parent: str | None
    definition: str


@dataclass(frozen=True)
class CompetencyTree:
    nodes: tuple[CompetencyNode, ...]

    def node(self, node_id: str) -> CompetencyNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def roots(self) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes if n.parent is None)

    def children(self, node_id: str) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes if n.parent == node_id)

    def leaves(self) -> tuple[str, ...]:
        have_children = {n.parent for n in self.nodes if n.parent is not None}
        return tuple(n.id for n in self.nodes if n.id not in have_children)

    def parent(self, node_id: str) -> str | None:
        return self.node(node_id).parent

    def definition(self, node_id: str) -> str:
        return self.node(node_id).definition


_N = CompetencyNode

_TREE_NODES = (
    _N("problem_setting", "Problem setting", None,
       "Recognise, understand, reformulate or model the activity and its components so that its solution can be computed."),
    _N("analysing", "Analysing", "problem_setting",
       "Collect, examine and interpret data about the system: environment descriptors and agent actions."),
    _N("data_collection", "Data collection", "analysing",
       "Gather details about the system."),
    _N("pattern_recognition", "Pattern recognition", "analysing",
       "Identify similarities, trends, ideas and structures within the system."),
    _N("modelling", "Modelling", "problem_setting",
       "Restructure, clean and update knowledge about the system."),
    _N("decomposition", "Decomposition", "modelling",
       "Divide the original task into sub-tasks that are easier to be solved."),
    _N("abstraction", "Abstraction", "modelling",
       "Simplify the original task, focus on key concepts and omit unimportant ones."),
    _N("data_representation", "Data representation", "problem_setting",
       "Illustrate or communicate information about the system and the task."),
    _N("algorithm", "Algorithm", None,
       "Conceive and represent a set of agent's actions that should be executed by a human, artificial or virtual agent to solve the task."),
    _N("variables", "Variables", "algorithm",
       "Entity that stores values about the system or intermediate data."),
    _N("operators", "Operators", "algorithm",
       "Mathematical, logical or comparison operators, or specific commands and actions."),
    _N("control_structures", "Control structures", "algorithm",
       "Statements that define the agent actions flow's direction, such as sequential, repetitive, or conditional."),
    _N("sequences", "Sequences", "control_structures",
       "Linear succession of agent actions."),
    _N("repetitions", "Repetitions", "control_structures",
       "Iterative agent actions."),
    _N("conditionals", "Conditionals", "control_structures",
       "Agent actions dependent on conditions."),
    _N("functions", "Functions", "algorithm",
       "Set of reusable agent actions which produce a result for a specific sub-task."),
    _N("parallelism", "Parallelism", "algorithm",
       "Simultaneous agent actions."),
    _N("events", "Events", "algorithm",
       "Variations in the environment descriptors that trigger the execution of agent actions."),
    _N("assessment", "Assessment", None,
       "Evaluate the quality and validity of the solution in relation to the original task."),
    _N("correctness", "Correctness", "assessment",
       "Assess whether the task solution is correct."),
    _N("algorithm_debugging", "Algorithm debugging", "correctness",
       "Evaluate whether the algorithm is correct, identifying errors and fixing bugs that prevent it from functioning correctly."),
    _N("system_state_verification", "System state verification", "correctness",
       "Evaluate whether the system is in the expected state, detecting and solving potential issues."),
    _N("constraints_validation", "Constraints validation", "correctness",
       "Evaluate whether the solution satisfies the constraints established for the system and the algorithm."),
    _N("effectiveness", "Effectiveness", "assessment",
       "Assess how effective is the task solution."),
    _N("optimisation", "Optimisation", "effectiveness",
       "Evaluate whether the solution meets the standards in a timely and resource-efficient manner, and identify ways to optimise the performance."),
    _N("generalisation", "Generalisation", "effectiveness",
       "Formulate the task solution in such a way that can be reused or applied to different situations."),
)

# Report/leaf order used everywhere a report or table iterates competencies.
LEAF_ORDER = (
    "data_collection",
    "pattern_recognition",
    "decomposition",
    "abstraction",
    "data_representation",
    "variables",
    "operators",
    "sequences",
    "repetitions",
    "conditionals",
    "functions",
    "parallelism",
    "events",
    "algorithm_debugging",
    "system_state_verification",
    "constraints_validation",
    "optimisation",
    "generalisation",
)


def competency_tree() -> CompetencyTree:
    """The fixed competency hierarchy. Rebuilt on every call, always equal."""
    return CompetencyTree(nodes=_TREE_NODES)


def catalog_json() -> dict:
    """Catalog export: the tree plus the atom vocabulary."""
    tree = competency_tree()
    return {
        "competencies": [
            {"id": n.id, "label": n.label, "parent": n.parent, "definition": n.definition}
            for n in tree.nodes
        ],
        "atoms": [
            {"name": a.name, "family": a.family, "alias": a.alias}
            for a in atom_vocabulary()
        ],
    }
