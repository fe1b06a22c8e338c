/**
 * DOM rendering. Pure functions from state to elements; all interaction is
 * routed through the callbacks given by main.ts. Competency statuses are
 * printed verbatim from the engine's report; nothing is computed here.
 */

import { changedDimensions, editForAtom, functionalityDelta, StudioState } from "./state";
import {
  AnalysisReport,
  Catalog,
  DesignSolution,
  FixtureInfo,
  FUNCTIONALITIES,
  Profile,
  ProfileEdit,
  ScalarDimension,
} from "./types";

export interface Actions {
  edit(edit: ProfileEdit): void;
  loadFixture(name: string): void;
  setMode(mode: "analyze" | "design"): void;
  toggleTarget(set: "develop" | "avoid", competency: string): void;
  toggleLock(dimension: ScalarDimension | "functionalities", on: boolean): void;
  setMaxSolutions(count: number): void;
  submitDesign(): void;
  loadCandidate(profile: Profile): void;
}

const SCALAR_OPTIONS: Record<ScalarDimension, readonly (string | boolean)[]> = {
  domain: ["unplugged", "robotic", "virtual"],
  resettability: ["direct", "indirect", "none"],
  observability: ["total", "partial", "none"],
  cardinality: ["one_to_one", "many_to_one", "many_to_many"],
  explicitness: ["explicit", "implicit"],
  constrained: [true, false],
  representation: ["manifest_written", "manifest_non_written", "latent"],
  state_unknown: [true, false],
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, attrs: Record<string, string> = {}, ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  node.append(...children);
  return node;
}

export function leavesOf(catalog: Catalog): string[] {
  const parents = new Set(catalog.competencies.map((c) => c.parent).filter(Boolean));
  return catalog.competencies.filter((c) => !parents.has(c.id)).map((c) => c.id);
}

// -- fixtures ----------------------------------------------------------------

export function renderFixtureBrowser(fixtures: FixtureInfo[], state: StudioState,
                                     actions: Actions): HTMLElement {
  const list = el("ul", { class: "fixture-list" });
  for (const fixture of fixtures) {
    const button = el("button", { "data-fixture": fixture.name }, fixture.name);
    button.addEventListener("click", () => actions.loadFixture(fixture.name));
    if (state.loadedFixture === fixture.name) button.classList.add("selected");
    const tags = fixture.group ? `${fixture.domain} · ${fixture.group}` : fixture.domain;
    list.append(el("li", {}, button, el("small", {}, ` ${tags}`)));
  }
  return el("section", { class: "fixtures" }, el("h2", {}, "Activities"), list);
}

// -- characteristics editor ---------------------------------------------------

export function renderProfileEditor(state: StudioState, actions: Actions): HTMLElement {
  const profile = state.draftProfile;
  const form = el("section", { class: "profile-editor" }, el("h2", {}, "Characteristics"));

  const funcRow = el("div", { class: "functionalities" });
  for (const name of FUNCTIONALITIES) {
    const input = el("input", { type: "checkbox", "data-functionality": name }) as HTMLInputElement;
    input.checked = profile.functionalities.includes(name);
    input.addEventListener("change", () =>
      actions.edit({ kind: "toggle_functionality", name }));
    funcRow.append(el("label", {}, input, name));
  }
  form.append(el("div", { class: "dimension" }, el("span", {}, "functionalities"), funcRow));

  for (const dimension of Object.keys(SCALAR_OPTIONS) as ScalarDimension[]) {
    const select = el("select", { "data-dimension": dimension }) as HTMLSelectElement;
    for (const option of SCALAR_OPTIONS[dimension]) {
      select.append(el("option", { value: String(option) }, String(option)));
    }
    select.value = String(profile[dimension]);
    select.addEventListener("change", () => {
      const raw = select.value;
      const value = (dimension === "constrained" || dimension === "state_unknown")
        ? raw === "true" : raw;
      actions.edit({ kind: "set", dimension, value: value as Profile[ScalarDimension] });
    });
    const row = el("div", { class: "dimension" }, el("span", {}, dimension), select);
    if (state.baselineProfile
        && changedDimensions(state.baselineProfile, profile).includes(dimension)) {
      row.classList.add("changed");
    }
    form.append(row);
  }
  return form;
}

// -- competency report ---------------------------------------------------------

function reasonText(kind: string): string {
  if (kind === "missing_required") return "missing";
  if (kind === "missing_any_group") return "needs one of";
  return "inhibited by";
}

export function renderReport(report: AnalysisReport | null, state: StudioState,
                             actions: Actions): HTMLElement {
  const section = el("section", { class: "report" }, el("h2", {}, "Competencies"));
  if (!report) {
    section.append(el("p", {}, "No report yet."));
    return section;
  }
  const table = el("table", {},
    el("thead", {}, el("tr", {},
      el("th", {}, "competency"), el("th", {}, "status"),
      el("th", {}, "why / hints"), el("th", {}, "support"))));
  const body = el("tbody", {});
  for (const [leaf, result] of Object.entries(report.results)) {
    const row = el("tr", { "data-competency": leaf, "data-status": result.status });
    row.append(el("td", {}, leaf));
    row.append(el("td", { class: `status ${result.status}` }, result.status));
    const why = el("td", { class: "reasons" });
    for (const reason of result.reasons) {
      why.append(el("span", {}, `${reasonText(reason.kind)}: `));
      reason.atoms.forEach((atom, i) => {
        if (i > 0) why.append(", ");
        const fix = editForAtom(atom, state.draftProfile);
        if (fix) {
          const hint = el("button", { class: "hint", "data-atom": atom }, atom);
          hint.addEventListener("click", () => actions.edit(fix));
          why.append(hint);
        } else {
          why.append(el("span", { "data-atom": atom }, atom));
        }
      });
      why.append(el("span", {}, " "));
    }
    row.append(why);
    row.append(el("td", {},
      result.support_score ? `${result.support_score} (${result.supporters_present.join(", ")})` : "0"));
    body.append(row);
  }
  table.append(body);
  section.append(table);
  return section;
}

// -- baseline diff --------------------------------------------------------------

export function renderBaselineDiff(state: StudioState): HTMLElement {
  const section = el("section", { class: "baseline-diff" });
  if (!state.baselineProfile || !state.dirty) return section;
  const changed = changedDimensions(state.baselineProfile, state.draftProfile);
  const delta = functionalityDelta(state.baselineProfile, state.draftProfile);
  if (!changed.length && !delta.added.length && !delta.removed.length) return section;
  section.append(el("h3", {}, `Changes vs ${state.loadedFixture ?? "baseline"}`));
  const list = el("ul", {});
  for (const dimension of changed) {
    list.append(el("li", { class: "changed-row", "data-dimension": dimension },
      `${dimension}: ${String(state.baselineProfile[dimension])} -> `
      + `${String(state.draftProfile[dimension])}`));
  }
  if (delta.added.length) {
    list.append(el("li", { class: "changed-row", "data-dimension": "functionalities" },
      `functionalities added: ${delta.added.join(", ")}`));
  }
  if (delta.removed.length) {
    list.append(el("li", { class: "changed-row", "data-dimension": "functionalities" },
      `functionalities removed: ${delta.removed.join(", ")}`));
  }
  section.append(list);
  return section;
}

// -- design mode -----------------------------------------------------------------

export function renderDesignForm(leaves: string[], state: StudioState,
                                 actions: Actions): HTMLElement {
  const query = state.designQuery;
  const section = el("section", { class: "design-form" }, el("h2", {}, "Target competencies"));
  const table = el("table", {}, el("thead", {}, el("tr", {},
    el("th", {}, "competency"), el("th", {}, "develop"), el("th", {}, "avoid"))));
  const body = el("tbody", {});
  for (const leaf of leaves) {
    const develop = el("input", { type: "checkbox", "data-develop": leaf }) as HTMLInputElement;
    develop.checked = query.develop.includes(leaf);
    develop.addEventListener("change", () => actions.toggleTarget("develop", leaf));
    const avoid = el("input", { type: "checkbox", "data-avoid": leaf }) as HTMLInputElement;
    avoid.checked = query.avoid.includes(leaf);
    avoid.addEventListener("change", () => actions.toggleTarget("avoid", leaf));
    body.append(el("tr", {}, el("td", {}, leaf), el("td", {}, develop), el("td", {}, avoid)));
  }
  table.append(body);

  const locks = el("div", { class: "locks" }, el("h3", {}, "Locked dimensions"));
  const lockable: (ScalarDimension | "functionalities")[] = [
    "functionalities", "resettability", "observability", "cardinality",
    "explicitness", "constrained", "representation", "state_unknown", "domain",
  ];
  for (const dimension of lockable) {
    const input = el("input", { type: "checkbox", "data-lock": dimension }) as HTMLInputElement;
    input.checked = dimension in query.locked;
    input.addEventListener("change", () => actions.toggleLock(dimension, input.checked));
    locks.append(el("label", {}, input, `${dimension} (from draft)`));
  }

  const max = el("input", {
    type: "number", min: "1", value: String(query.max_solutions),
    "data-max-solutions": "",
  }) as HTMLInputElement;
  max.addEventListener("change", () => actions.setMaxSolutions(Number(max.value)));
  const maxRow = el("label", { class: "max-solutions" }, "candidates to list ", max);

  const submit = el("button", { class: "submit-design" }, "Find designs") as HTMLButtonElement;
  submit.disabled = query.develop.length === 0;
  submit.addEventListener("click", () => actions.submitDesign());
  section.append(table, locks, maxRow, submit);
  return section;
}

export function renderSolution(solution: DesignSolution | null,
                               actions: Actions): HTMLElement {
  const section = el("section", { class: "solution" });
  if (!solution) return section;
  section.append(el("h2", {}, "Design solution"));

  const constraints = el("ul", { class: "constraints" });
  constraints.append(el("li", {}, `must: ${solution.constraints.must.join(", ") || "(none)"}`));
  constraints.append(el("li", {},
    `must not: ${solution.constraints.must_not.join(", ") || "(none)"}`));
  for (const group of solution.constraints.choose_one_of) {
    constraints.append(el("li", {}, `choose one of: ${group.join(", ")}`));
  }
  section.append(constraints);

  if (!solution.feasible) {
    const conflicts = el("ul", { class: "conflicts" });
    for (const conflict of solution.conflicts) {
      conflicts.append(el("li", {}, conflict.explanation));
    }
    if (!solution.conflicts.length) {
      conflicts.append(el("li", {}, "No profile satisfies this query."));
    }
    section.append(el("h3", {}, "Infeasible"), conflicts);
    return section;
  }

  const list = el("ol", { class: "candidates" });
  solution.profiles.forEach((ranked, index) => {
    const load = el("button", { class: "load-candidate", "data-candidate": String(index) },
      "open in analyze mode");
    load.addEventListener("click", () => actions.loadCandidate(ranked.profile));
    const summary = `${ranked.profile.resettability}, `
      + `${ranked.profile.representation}, `
      + `${ranked.profile.constrained ? "constrained" : "unconstrained"}, `
      + `${ranked.profile.functionalities.length} functionalities`
      + ` — support ${ranked.support_total}`;
    list.append(el("li", {}, el("span", {}, summary), load));
  });
  section.append(list);
  return section;
}

// -- chrome ------------------------------------------------------------------------

export function renderError(state: StudioState): HTMLElement {
  const box = el("div", { class: "error", role: "alert" });
  if (state.error) box.append(`Engine rejected the request: ${state.error}`);
  return box;
}

export function renderModeSwitch(state: StudioState, actions: Actions): HTMLElement {
  const bar = el("nav", { class: "mode-switch" });
  for (const mode of ["analyze", "design"] as const) {
    const button = el("button", { "data-mode": mode }, mode);
    if (state.mode === mode) button.classList.add("selected");
    button.addEventListener("click", () => actions.setMode(mode));
    bar.append(button);
  }
  return bar;
}

/** Full page composition; main.ts and the UI tests render through this. */
export function renderApp(root: HTMLElement, state: StudioState,
                          fixtures: FixtureInfo[], leaves: string[],
                          actions: Actions): void {
  root.replaceChildren(renderModeSwitch(state, actions), renderError(state));
  if (state.mode === "analyze") {
    root.append(
      renderFixtureBrowser(fixtures, state, actions),
      renderProfileEditor(state, actions),
      renderBaselineDiff(state),
      renderReport(state.liveReport, state, actions),
    );
  } else {
    root.append(
      renderDesignForm(leaves, state, actions),
      renderSolution(state.lastSolution, actions),
    );
  }
}
