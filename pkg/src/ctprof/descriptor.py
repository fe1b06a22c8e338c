"""Activity descriptor model: parsing, validation, derivation, task typing.

A descriptor is the structured record of one computational thinking activity:
its components (problem solver with tools, agent with actions, environment),
the task elements (initial state / algorithm / final state, each given or to
be found) and the declared characteristics. Files use UTF-8 JSON with the
``.ctp.json`` extension; the serializer emits a canonical form so equal
descriptors are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import catalog
from .errors import ParseError, SchemaError, UnderivableDomain, UnsupportedObjectiveSet

TOOL_CATEGORIES = ("embodied", "symbolic", "formal")
TOOL_ROLES = ("reasoning", "interaction")
AGENT_KINDS = ("human", "robot", "virtual")
ENVIRONMENT_KINDS = ("physical", "virtual")
ELEMENT_STATUS = ("given", "to_find")
ELEMENT_COUNT = ("one", "many")
TASK_ELEMENTS = ("initial_state", "algorithm", "final_state")

TASK_TYPES = (
    "find_initial_state",
    "find_algorithm",
    "find_final_state",
    "creation_act",
    "application_act",
    "project_act",
)

ISSUE_CODES = (
    "NoObjective",
    "DomainMismatch",
    "MissingInteraction",
    "BadFieldPresence",
    "UnknownEnum",
    "DuplicateName",
)


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    path: str
    message: str


@dataclass(frozen=True)
class Tool:
    name: str
    category: str
    roles: frozenset[str]


@dataclass(frozen=True)
class ProblemSolver:
    tools: tuple[Tool, ...]
    is_agent: bool


@dataclass(frozen=True)
class AgentAction:
    name: str
    reversible: bool


@dataclass(frozen=True)
class Agent:
    kind: str
    actions: tuple[AgentAction, ...]


@dataclass(frozen=True)
class Environment:
    kind: str
    descriptors: tuple[str, ...]


@dataclass(frozen=True)
class Components:
    problem_solver: ProblemSolver
    agent: Agent
    environment: Environment


@dataclass(frozen=True)
class TaskElement:
    status: str
    count: str
    explicitness: str | None = None  # only when status == given
    constrained: bool | None = None  # only when status == to_find


@dataclass(frozen=True)
class TaskSpec:
    initial_state: TaskElement
    algorithm: TaskElement
    final_state: TaskElement

    def element(self, name: str) -> TaskElement:
        return getattr(self, name)


@dataclass(frozen=True)
class DeclaredCharacteristics:
    functionalities: frozenset[str]
    resettability: str
    observability: str
    representation: str
    domain: str | None = None
    cardinality: str | None = None


@dataclass(frozen=True)
class Descriptor:
    name: str
    group: str | None
    components: Components
    task: TaskSpec
    characteristics: DeclaredCharacteristics


@dataclass(frozen=True)
class CharacteristicProfile:
    """Fully resolved characteristic vector; the analyzer's sole input."""

    domain: str
    functionalities: frozenset[str]
    resettability: str
    observability: str
    cardinality: str
    explicitness: str
    constrained: bool
    representation: str
    state_unknown: bool

    def to_json_dict(self) -> dict:
        return {
            "domain": self.domain,
            "functionalities": sorted(self.functionalities),
            "resettability": self.resettability,
            "observability": self.observability,
            "cardinality": self.cardinality,
            "explicitness": self.explicitness,
            "constrained": self.constrained,
            "representation": self.representation,
            "state_unknown": self.state_unknown,
        }


PROFILE_DIMENSIONS = (
    "domain",
    "functionalities",
    "resettability",
    "observability",
    "cardinality",
    "explicitness",
    "constrained",
    "representation",
    "state_unknown",
)


# ---------------------------------------------------------------------------
# Parsing (strict: unknown keys rejected, enums matched case-sensitively)
# ---------------------------------------------------------------------------


class _Reader:
    """Walks a decoded JSON object collecting schema issues with paths."""

    def __init__(self):
        self.issues: list[ValidationIssue] = []

    def issue(self, code: str, path: str, message: str):
        self.issues.append(ValidationIssue(code, path, message))

    def obj(self, value, path: str, known: tuple[str, ...], required: tuple[str, ...]) -> dict:
        if not isinstance(value, dict):
            self.issue("BadFieldPresence", path, f"expected an object, got {type(value).__name__}")
            return {}
        for key in value:
            if key not in known:
                self.issue("BadFieldPresence", f"{path}.{key}" if path else key, "unknown key")
        for key in required:
            if key not in value:
                self.issue("BadFieldPresence", f"{path}.{key}" if path else key, "missing required key")
        return value

    def string(self, obj: dict, key: str, path: str, default=None) -> str | None:
        if key not in obj:
            return default
        value = obj[key]
        if not isinstance(value, str):
            self.issue("BadFieldPresence", f"{path}.{key}", "expected a string")
            return default
        return value

    def boolean(self, obj: dict, key: str, path: str, default=None):
        if key not in obj:
            return default
        value = obj[key]
        if not isinstance(value, bool):
            self.issue("BadFieldPresence", f"{path}.{key}", "expected a boolean")
            return default
        return value

    def enum(self, obj: dict, key: str, path: str, values: tuple[str, ...], default=None):
        value = self.string(obj, key, path, default)
        if value is default:
            return default
        if value not in values:
            self.issue("UnknownEnum", f"{path}.{key}",
                       f"{value!r} is not one of {', '.join(values)}")
            return default
        return value

    def array(self, obj: dict, key: str, path: str) -> list:
        value = obj.get(key)
        if value is None:
            return []
        if not isinstance(value, list):
            self.issue("BadFieldPresence", f"{path}.{key}", "expected an array")
            return []
        return value


def _reject_duplicate_keys(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ValueError(f"duplicate key {key!r}")
        seen.add(key)
    return dict(pairs)


def _load_json(text: str):
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _parse_tool(r: _Reader, raw, path: str) -> Tool:
    obj = r.obj(raw, path, known=("name", "category", "roles"), required=("name", "category", "roles"))
    roles = []
    for i, role in enumerate(r.array(obj, "roles", path)):
        if role not in TOOL_ROLES:
            r.issue("UnknownEnum", f"{path}.roles[{i}]",
                    f"{role!r} is not one of {', '.join(TOOL_ROLES)}")
        else:
            roles.append(role)
    return Tool(
        name=r.string(obj, "name", path, "") or "",
        category=r.enum(obj, "category", path, TOOL_CATEGORIES, "embodied"),
        roles=frozenset(roles),
    )


def _parse_task_element(r: _Reader, raw, path: str) -> TaskElement:
    obj = r.obj(raw, path, known=("status", "count", "explicitness", "constrained"),
                required=("status", "count"))
    return TaskElement(
        status=r.enum(obj, "status", path, ELEMENT_STATUS, "given"),
        count=r.enum(obj, "count", path, ELEMENT_COUNT, "one"),
        explicitness=r.enum(obj, "explicitness", path, ("explicit", "implicit")),
        constrained=r.boolean(obj, "constrained", path),
    )


def _parse_descriptor_obj(r: _Reader, data) -> Descriptor:
    top = r.obj(data, "", known=("name", "group", "components", "task", "characteristics"),
                required=("name", "components", "task", "characteristics"))

    comp = r.obj(top.get("components"), "components",
                 known=("problem_solver", "agent", "environment"),
                 required=("problem_solver", "agent", "environment"))
    ps = r.obj(comp.get("problem_solver"), "components.problem_solver",
               known=("tools", "is_agent"), required=("tools", "is_agent"))
    tools = tuple(
        _parse_tool(r, raw, f"components.problem_solver.tools[{i}]")
        for i, raw in enumerate(r.array(ps, "tools", "components.problem_solver"))
    )
    agent = r.obj(comp.get("agent"), "components.agent",
                  known=("kind", "actions"), required=("kind", "actions"))
    actions = []
    for i, raw in enumerate(r.array(agent, "actions", "components.agent")):
        path = f"components.agent.actions[{i}]"
        obj = r.obj(raw, path, known=("name", "reversible"), required=("name", "reversible"))
        actions.append(AgentAction(
            name=r.string(obj, "name", path, "") or "",
            reversible=bool(r.boolean(obj, "reversible", path, False)),
        ))
    env = r.obj(comp.get("environment"), "components.environment",
                known=("kind", "descriptors"), required=("kind", "descriptors"))
    descriptors = []
    for i, raw in enumerate(r.array(env, "descriptors", "components.environment")):
        if not isinstance(raw, str):
            r.issue("BadFieldPresence", f"components.environment.descriptors[{i}]",
                    "expected a string")
        else:
            descriptors.append(raw)

    task = r.obj(top.get("task"), "task", known=TASK_ELEMENTS, required=TASK_ELEMENTS)
    elements = {
        name: _parse_task_element(r, task.get(name), f"task.{name}")
        for name in TASK_ELEMENTS
    }

    chars = r.obj(top.get("characteristics"), "characteristics",
                  known=("functionalities", "resettability", "observability",
                         "representation", "domain", "cardinality"),
                  required=("functionalities", "resettability", "observability",
                            "representation"))
    functionalities = []
    for i, raw in enumerate(r.array(chars, "functionalities", "characteristics")):
        if raw not in catalog.FUNCTIONALITIES:
            r.issue("UnknownEnum", f"characteristics.functionalities[{i}]",
                    f"{raw!r} is not one of {', '.join(catalog.FUNCTIONALITIES)}")
        else:
            functionalities.append(raw)

    return Descriptor(
        name=r.string(top, "name", "", "") or "",
        group=r.string(top, "group", ""),
        components=Components(
            problem_solver=ProblemSolver(tools=tools, is_agent=bool(r.boolean(ps, "is_agent", "components.problem_solver", False))),
            agent=Agent(kind=r.enum(agent, "kind", "components.agent", AGENT_KINDS, "human"),
                        actions=tuple(actions)),
            environment=Environment(kind=r.enum(env, "kind", "components.environment", ENVIRONMENT_KINDS, "physical"),
                                    descriptors=tuple(descriptors)),
        ),
        task=TaskSpec(**elements),
        characteristics=DeclaredCharacteristics(
            functionalities=frozenset(functionalities),
            resettability=r.enum(chars, "resettability", "characteristics",
                                 catalog.FAMILY_VALUES["resettability"], "none"),
            observability=r.enum(chars, "observability", "characteristics",
                                 catalog.FAMILY_VALUES["observability"], "none"),
            representation=r.enum(chars, "representation", "characteristics",
                                  catalog.FAMILY_VALUES["representation"], "latent"),
            domain=r.enum(chars, "domain", "characteristics", catalog.DOMAINS),
            cardinality=r.enum(chars, "cardinality", "characteristics",
                               catalog.FAMILY_VALUES["cardinality"]),
        ),
    )


def parse_descriptor(text: str) -> Descriptor:
    """Parse a descriptor document. Raises ParseError / SchemaError."""
    data = _load_json(text)
    r = _Reader()
    descriptor = _parse_descriptor_obj(r, data)
    if r.issues:
        raise SchemaError(sorted(r.issues, key=lambda i: (i.path, i.code)))
    return descriptor


# ---------------------------------------------------------------------------
# Canonical serialization
# ---------------------------------------------------------------------------


def descriptor_to_json_dict(d: Descriptor) -> dict:
    """Plain-dict form with keys in schema order and set fields sorted."""
    top: dict = {"name": d.name}
    if d.group is not None:
        top["group"] = d.group
    top["components"] = {
        "problem_solver": {
            "tools": [
                {"name": t.name, "category": t.category, "roles": sorted(t.roles)}
                for t in d.components.problem_solver.tools
            ],
            "is_agent": d.components.problem_solver.is_agent,
        },
        "agent": {
            "kind": d.components.agent.kind,
            "actions": [
                {"name": a.name, "reversible": a.reversible}
                for a in d.components.agent.actions
            ],
        },
        "environment": {
            "kind": d.components.environment.kind,
            "descriptors": list(d.components.environment.descriptors),
        },
    }
    task = {}
    for name in TASK_ELEMENTS:
        el = d.task.element(name)
        entry: dict = {"status": el.status, "count": el.count}
        if el.explicitness is not None:
            entry["explicitness"] = el.explicitness
        if el.constrained is not None:
            entry["constrained"] = el.constrained
        task[name] = entry
    top["task"] = task
    chars: dict = {
        "functionalities": sorted(d.characteristics.functionalities),
        "resettability": d.characteristics.resettability,
        "observability": d.characteristics.observability,
        "representation": d.characteristics.representation,
    }
    if d.characteristics.domain is not None:
        chars["domain"] = d.characteristics.domain
    if d.characteristics.cardinality is not None:
        chars["cardinality"] = d.characteristics.cardinality
    top["characteristics"] = chars
    return top


def serialize_descriptor(d: Descriptor) -> str:
    """Canonical form: schema key order, two-space indent, trailing newline."""
    return json.dumps(descriptor_to_json_dict(d), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _derive_domain(d: Descriptor) -> str | None:
    agent = d.components.agent.kind
    env = d.components.environment.kind
    if agent == "human" and env == "physical":
        return "unplugged"
    if agent == "robot" and env == "physical":
        return "robotic"
    if agent == "virtual" and env == "virtual":
        return "virtual"
    return None


def validate_descriptor(d: Descriptor) -> list[ValidationIssue]:
    """Check all semantic invariants. Empty list iff the descriptor is valid."""
    issues: list[ValidationIssue] = []

    def add(code: str, path: str, message: str):
        issues.append(ValidationIssue(code, path, message))

    if not d.name:
        add("BadFieldPresence", "name", "must be non-empty")
    if d.group is not None and not d.group:
        add("BadFieldPresence", "group", "must be non-empty when present")

    ps = d.components.problem_solver
    if not ps.is_agent and not any("interaction" in t.roles for t in ps.tools):
        add("MissingInteraction", "components.problem_solver",
            "needs a tool with role 'interaction' or is_agent=true")
    tool_names = [t.name for t in ps.tools]
    for name in sorted({n for n in tool_names if tool_names.count(n) > 1}):
        add("DuplicateName", "components.problem_solver.tools", f"duplicate tool name {name!r}")

    if not d.components.agent.actions:
        add("BadFieldPresence", "components.agent.actions", "must be non-empty")
    action_names = [a.name for a in d.components.agent.actions]
    for name in sorted({n for n in action_names if action_names.count(n) > 1}):
        add("DuplicateName", "components.agent.actions", f"duplicate action name {name!r}")

    if not d.components.environment.descriptors:
        add("BadFieldPresence", "components.environment.descriptors", "must be non-empty")
    env_names = list(d.components.environment.descriptors)
    for name in sorted({n for n in env_names if env_names.count(n) > 1}):
        add("DuplicateName", "components.environment.descriptors", f"duplicate descriptor {name!r}")

    to_find = [n for n in TASK_ELEMENTS if d.task.element(n).status == "to_find"]
    if not to_find:
        add("NoObjective", "task", "at least one element must have status 'to_find'")
    for name in TASK_ELEMENTS:
        el = d.task.element(name)
        if el.status == "given":
            if el.explicitness is None:
                add("BadFieldPresence", f"task.{name}.explicitness",
                    "required when status is 'given'")
            if el.constrained is not None:
                add("BadFieldPresence", f"task.{name}.constrained",
                    "only allowed when status is 'to_find'")
        else:
            if el.constrained is None:
                add("BadFieldPresence", f"task.{name}.constrained",
                    "required when status is 'to_find'")
            if el.explicitness is not None:
                add("BadFieldPresence", f"task.{name}.explicitness",
                    "only allowed when status is 'given'")

    if ps.is_agent and d.characteristics.observability != "total":
        add("BadFieldPresence", "characteristics.observability",
            "must be 'total' when the problem solver is the agent")

    declared = d.characteristics.domain
    if declared is not None and declared != _derive_domain(d):
        derived = _derive_domain(d) or "underivable"
        add("DomainMismatch", "characteristics.domain",
            f"declared {declared!r} but components derive {derived!r}")

    return sorted(issues, key=lambda i: (i.path, i.code))


# ---------------------------------------------------------------------------
# Derivation and task classification
# ---------------------------------------------------------------------------


def derive_characteristics(d: Descriptor) -> CharacteristicProfile:
    """Resolve the full characteristic profile of a valid descriptor."""
    domain = _derive_domain(d)
    if domain is None:
        raise UnderivableDomain(
            f"agent {d.components.agent.kind!r} with environment "
            f"{d.components.environment.kind!r} matches no domain")

    elements = [d.task.element(n) for n in TASK_ELEMENTS]
    to_find = [e for e in elements if e.status == "to_find"]
    given = [e for e in elements if e.status == "given"]

    if d.characteristics.cardinality is not None:
        cardinality = d.characteristics.cardinality
    elif all(e.count == "one" for e in elements):
        cardinality = "one_to_one"
    elif any(e.count == "many" for e in to_find):
        cardinality = "many_to_many"
    else:
        cardinality = "many_to_one"

    explicitness = "explicit" if all(e.explicitness == "explicit" for e in given) else "implicit"
    constrained = any(e.constrained for e in to_find)
    state_unknown = (d.task.initial_state.status == "to_find"
                     or d.task.final_state.status == "to_find")
    observability = "total" if d.components.problem_solver.is_agent else d.characteristics.observability

    return CharacteristicProfile(
        domain=domain,
        functionalities=d.characteristics.functionalities,
        resettability=d.characteristics.resettability,
        observability=observability,
        cardinality=cardinality,
        explicitness=explicitness,
        constrained=constrained,
        representation=d.characteristics.representation,
        state_unknown=state_unknown,
    )


def classify_task(t: TaskSpec) -> str:
    """Map the task's objective set to one of the six task types."""
    to_find = frozenset(n for n in TASK_ELEMENTS if t.element(n).status == "to_find")
    mapping = {
        frozenset({"initial_state"}): "find_initial_state",
        frozenset({"algorithm"}): "find_algorithm",
        frozenset({"final_state"}): "find_final_state",
        frozenset({"algorithm", "final_state"}): "creation_act",
        frozenset({"initial_state", "final_state"}): "application_act",
        frozenset({"initial_state", "algorithm"}): "project_act",
    }
    if to_find not in mapping:
        raise UnsupportedObjectiveSet(
            f"{len(to_find)} elements to find is outside the six task types")
    return mapping[to_find]


# ---------------------------------------------------------------------------
# Profile JSON (used by the HTTP service and the designer's lock parsing)
# ---------------------------------------------------------------------------


def profile_from_json(data, partial: bool = False):
    """Decode a profile object, collecting issues. Returns (profile_or_dict, issues).

    With ``partial=True`` missing dimensions are allowed and a plain dict of
    the present ones is returned (used for designer locks).
    """
    r = _Reader()
    known = PROFILE_DIMENSIONS
    obj = r.obj(data, "profile", known=known, required=() if partial else known)
    values: dict = {}
    if "domain" in obj:
        values["domain"] = r.enum(obj, "domain", "profile", catalog.DOMAINS, "unplugged")
    if "functionalities" in obj:
        funcs = []
        for i, raw in enumerate(r.array(obj, "functionalities", "profile")):
            if raw not in catalog.FUNCTIONALITIES:
                r.issue("UnknownEnum", f"profile.functionalities[{i}]",
                        f"{raw!r} is not one of {', '.join(catalog.FUNCTIONALITIES)}")
            else:
                funcs.append(raw)
        values["functionalities"] = frozenset(funcs)
    for family in ("resettability", "observability", "cardinality", "explicitness",
                   "representation"):
        if family in obj:
            values[family] = r.enum(obj, family, "profile",
                                    catalog.FAMILY_VALUES[family],
                                    catalog.FAMILY_VALUES[family][0])
    for flag in ("constrained", "state_unknown"):
        if flag in obj:
            values[flag] = bool(r.boolean(obj, flag, "profile", False))
    issues = sorted(r.issues, key=lambda i: (i.path, i.code))
    if partial or issues:
        return values, issues
    return CharacteristicProfile(**values), issues
