"""Markdown rendering of reports, diffs, design solutions and taxonomy tables.

All renderers are deterministic: the same value always produces the same
bytes.
"""

from __future__ import annotations

from . import catalog
from .analyzer import AnalysisReport, ProfileDiff
from .corpus import TaxonomyTable
from .descriptor import CharacteristicProfile
from .designer import DesignSolution

_REASON_LABEL = {
    "missing_required": "missing",
    "missing_any_group": "any of",
    "inhibited": "inhibited by",
}


def _profile_lines(p: CharacteristicProfile) -> list[str]:
    funcs = ", ".join(sorted(p.functionalities)) or "(none)"
    return [
        f"- problem domain: {p.domain}",
        f"- tool functionalities: {funcs}",
        f"- system: resettability {p.resettability}; observability {p.observability}",
        (f"- task: cardinality {p.cardinality}; explicitness {p.explicitness}; "
         f"constraints {'constrained' if p.constrained else 'unconstrained'}; "
         f"state to find: {'yes' if p.state_unknown else 'no'}"),
        f"- algorithm representation: {p.representation}",
    ]


def _reason_cell(result) -> str:
    parts = []
    for reason in result.reasons:
        parts.append(f"{_REASON_LABEL[reason.kind]}: {', '.join(reason.atoms)}")
    return "; ".join(parts)


def _support_cell(result) -> str:
    if not result.supporters_present:
        return "0"
    return f"{result.support_score} ({', '.join(result.supporters_present)})"


def render_report_markdown(r: AnalysisReport) -> str:
    lines = ["# Activity profile", "", "## Characteristics", ""]
    lines += _profile_lines(r.profile)
    lines += [
        "",
        f"## Competencies (ruleset: {r.ruleset_meta['name']} v{r.ruleset_meta['version']})",
        "",
        "| competency | status | reasons | support |",
        "| --- | --- | --- | --- |",
    ]
    for leaf in catalog.LEAF_ORDER:
        result = r.results[leaf]
        lines.append(
            f"| {leaf} | {result.status} | {_reason_cell(result)} | {_support_cell(result)} |")
    return "\n".join(lines) + "\n"


def render_profile_markdown(p: CharacteristicProfile) -> str:
    return "\n".join(["# Characteristic profile", ""] + _profile_lines(p)) + "\n"


def render_diff_markdown(d: ProfileDiff) -> str:
    lines = ["# Profile comparison", "", "## Changed dimensions", ""]
    if d.changed:
        lines += ["| dimension | before | after |", "| --- | --- | --- |"]
        for ch in d.changed:
            lines.append(f"| {ch.dimension} | {ch.before} | {ch.after} |")
    else:
        lines.append("(none)")
    if d.functionality_added or d.functionality_removed:
        lines += ["", "## Functionalities", ""]
        if d.functionality_added:
            lines.append(f"- added: {', '.join(d.functionality_added)}")
        if d.functionality_removed:
            lines.append(f"- removed: {', '.join(d.functionality_removed)}")
    lines += ["", "## Competencies", ""]
    lines.append(f"- gained: {', '.join(d.competencies_gained) or '(none)'}")
    lines.append(f"- lost: {', '.join(d.competencies_lost) or '(none)'}")
    return "\n".join(lines) + "\n"


def render_solution_markdown(s: DesignSolution) -> str:
    lines = ["# Design solution", "", "## Constraints", ""]
    lines.append(f"- must: {', '.join(s.must) or '(none)'}")
    lines.append(f"- must not: {', '.join(s.must_not) or '(none)'}")
    if s.choose_one_of:
        for group in s.choose_one_of:
            lines.append(f"- choose at least one of: {', '.join(group)}")
    if s.conflicts:
        lines += ["", "## Conflicts", ""]
        for c in s.conflicts:
            lines.append(f"- {c.explanation}")
    lines += ["", f"## Candidate profiles ({'feasible' if s.feasible else 'infeasible'})", ""]
    for i, rp in enumerate(s.profiles, start=1):
        lines.append(f"### Candidate {i} (support {rp.support_total})")
        lines.append("")
        lines += _profile_lines(rp.profile)
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def render_taxonomy_markdown(t: TaxonomyTable) -> str:
    title = ("Characteristics taxonomy" if t.kind == "characteristics"
             else "Competencies taxonomy")
    if t.kind == "competencies":
        title += " (activity families collapsed)" if t.collapse_groups else " (per profile)"
    lines = [f"# {title}", ""]
    header = "| " + " | ".join(["row"] + list(t.domains)) + " |"
    sep = "| " + " | ".join(["---"] * (len(t.domains) + 1)) + " |"
    lines += [header, sep]
    section = None
    for row in t.rows:
        if row.section != section:
            section = row.section
            lines.append(f"| **{section}** |" + " |" * len(t.domains))
        cells = [
            f"{row.cells[d].percent}% ({row.cells[d].numerator}/{row.cells[d].denominator})"
            for d in t.domains
        ]
        lines.append("| " + " | ".join([row.key] + cells) + " |")
    return "\n".join(lines) + "\n"
