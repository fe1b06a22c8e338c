"""Exception types shared across the engine."""

from __future__ import annotations


class CtprofError(Exception):
    """Base class for all engine errors."""


class ParseError(CtprofError):
    """Malformed document. Carries the source line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class SchemaError(CtprofError):
    """Structurally invalid document: unknown keys, wrong types, bad enum values.

    ``issues`` is a list of ValidationIssue records locating each problem.
    """

    def __init__(self, issues):
        self.issues = list(issues)
        lines = "; ".join(f"{i.path}: {i.message}" for i in self.issues)
        super().__init__(f"{len(self.issues)} schema issue(s): {lines}")


class UnknownAtom(CtprofError):
    """Atom identifier outside the closed vocabulary."""


class UnknownCompetency(CtprofError):
    """Competency identifier that is not a leaf of the catalogue."""


class MissingCompetency(CtprofError):
    """Ruleset does not define a rule for every leaf competency."""


class OverlapError(CtprofError):
    """Rule atom sets violate disjointness (required vs inhibitors vs supporters)."""


class UnderivableDomain(CtprofError):
    """Agent/environment kind combination outside the three named domains."""


class UnsupportedObjectiveSet(CtprofError):
    """Task objective set outside the six enumerated task types."""


class EmptyDevelopSet(CtprofError):
    """Design query with no target competencies."""


class InvalidDesignQuery(CtprofError):
    """Design query violating its invariants (overlapping sets, bad locks...)."""


class EmptyCorpus(CtprofError):
    """Corpus directory with no descriptor files."""


class CorpusLoadError(CtprofError):
    """One or more corpus files failed to parse or validate.

    ``failures`` maps source path -> list of ValidationIssue; entries that
    loaded fine are still reported in ``loaded``.
    """

    def __init__(self, failures, loaded):
        self.failures = dict(failures)
        self.loaded = list(loaded)
        parts = []
        for path, issues in self.failures.items():
            parts.append(f"{path}: " + "; ".join(f"{i.path}: {i.message}" for i in issues))
        super().__init__(f"{len(self.failures)} corpus file(s) failed: " + " | ".join(parts))


class PortInUse(CtprofError):
    """Requested service port is already bound."""
