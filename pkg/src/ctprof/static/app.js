"use strict";
(() => {
  // src/types.ts
  var FUNCTIONALITIES = [
    "variables",
    "operators",
    "sequences",
    "repetitions",
    "conditionals",
    "functions",
    "parallelism",
    "events"
  ];
  var ApiError = class extends Error {
    issues;
    constructor(message, issues = []) {
      super(message);
      this.issues = issues;
    }
  };

  // src/api.ts
  async function request(url, init) {
    const response = await fetch(url, init);
    const text = await response.text();
    if (!response.ok) {
      let issues = [];
      try {
        issues = JSON.parse(text).issues ?? [];
      } catch {
      }
      throw new ApiError(`${init?.method ?? "GET"} ${url} -> ${response.status}`, issues);
    }
    return JSON.parse(text);
  }
  function post(url, body) {
    return request(url, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body)
    });
  }
  function createApiClient(base = "") {
    return {
      catalog: () => request(`${base}/api/catalog`),
      fixtures: async () => {
        const data = await request(`${base}/api/fixtures`);
        return data.fixtures;
      },
      fixture: (name) => request(`${base}/api/fixtures/${encodeURIComponent(name)}`),
      analyze: (profile) => post(`${base}/api/analyze`, profile),
      design: (query) => post(`${base}/api/design`, query)
    };
  }

  // src/app.ts
  function createActions(store) {
    return {
      edit: (edit) => void store.applyProfileEdit(edit),
      loadFixture: (name) => void store.loadFixture(name),
      setMode: (mode) => store.setMode(mode),
      toggleTarget: (set, competency) => store.toggleTarget(set, competency),
      toggleLock: (dimension, on) => {
        if (dimension === "functionalities") {
          store.setLock(
            "functionalities",
            on ? store.getState().draftProfile.functionalities : void 0
          );
        } else {
          const dim = dimension;
          store.setLock(dim, on ? store.getState().draftProfile[dim] : void 0);
        }
      },
      setMaxSolutions: (count) => store.setMaxSolutions(count),
      submitDesign: () => void store.submitDesignQuery(),
      loadCandidate: (profile) => void store.loadCandidate(profile)
    };
  }

  // src/state.ts
  var DEFAULT_PROFILE = {
    domain: "unplugged",
    functionalities: ["operators", "sequences", "variables"],
    resettability: "none",
    observability: "total",
    cardinality: "one_to_one",
    explicitness: "explicit",
    constrained: false,
    representation: "manifest_non_written",
    state_unknown: false
  };
  function emptyQuery() {
    return { develop: [], avoid: [], locked: {}, max_solutions: 20 };
  }
  var Store = class {
    constructor(api) {
      this.api = api;
      this.state = {
        mode: "analyze",
        draftProfile: { ...DEFAULT_PROFILE },
        liveReport: null,
        designQuery: emptyQuery(),
        lastSolution: null,
        loadedFixture: null,
        baselineProfile: null,
        dirty: false,
        error: null,
        reportRevision: 0
      };
    }
    state;
    revision = 0;
    listeners = [];
    getState() {
      return this.state;
    }
    subscribe(listener) {
      this.listeners.push(listener);
      return () => {
        this.listeners = this.listeners.filter((l) => l !== listener);
      };
    }
    set(patch) {
      this.state = { ...this.state, ...patch };
      for (const listener of this.listeners) listener(this.state);
    }
    setMode(mode) {
      if (mode !== this.state.mode) this.set({ mode });
    }
    /** Replace the draft wholesale and refetch its report. */
    async setDraft(profile, opts) {
      this.set({
        draftProfile: normalizeProfile(profile),
        loadedFixture: opts?.fixture !== void 0 ? opts.fixture : this.state.loadedFixture,
        baselineProfile: opts?.baseline !== void 0 ? opts.baseline : this.state.baselineProfile,
        dirty: false,
        error: null
      });
      await this.refreshReport();
    }
    async loadFixture(name) {
      const detail = await this.api.fixture(name);
      await this.setDraft(detail.profile, { fixture: name, baseline: detail.profile });
    }
    /** Bring a design candidate into analyze mode (baseline stays the fixture). */
    async loadCandidate(profile) {
      this.set({ mode: "analyze", dirty: true, error: null });
      await this.setDraftKeepDirty(profile);
    }
    async setDraftKeepDirty(profile) {
      this.set({ draftProfile: normalizeProfile(profile) });
      await this.refreshReport();
    }
    /**
     * Apply a single dimension/functionality change. Re-applying the current
     * value is a no-op: no state change and no request. Otherwise the draft
     * advances one revision and a fresh report is requested; responses to
     * older revisions are discarded on arrival.
     */
    async applyProfileEdit(edit) {
      const next = applyEdit(this.state.draftProfile, edit);
      if (next === null) return;
      this.set({ draftProfile: next, dirty: true, error: null });
      await this.refreshReport();
    }
    async refreshReport() {
      const tag = ++this.revision;
      try {
        const report = await this.api.analyze(this.state.draftProfile);
        if (tag !== this.revision) return;
        this.set({ liveReport: report, reportRevision: tag, error: null });
      } catch (error) {
        if (tag !== this.revision) return;
        this.set({ error: describeError(error) });
      }
    }
    // -- design mode -------------------------------------------------------
    /** Toggle a competency in develop/avoid; the two sets stay disjoint. */
    toggleTarget(set, competency) {
      const query = this.state.designQuery;
      const mine = new Set(query[set]);
      const other = new Set(query[set === "develop" ? "avoid" : "develop"]);
      if (mine.has(competency)) {
        mine.delete(competency);
      } else {
        mine.add(competency);
        other.delete(competency);
      }
      const develop = set === "develop" ? mine : other;
      const avoid = set === "avoid" ? mine : other;
      this.set({
        designQuery: { ...query, develop: [...develop].sort(), avoid: [...avoid].sort() }
      });
    }
    setLock(dimension, value) {
      const locked = { ...this.state.designQuery.locked };
      if (value === void 0) {
        delete locked[dimension];
      } else {
        locked[dimension] = value;
      }
      this.set({ designQuery: { ...this.state.designQuery, locked } });
    }
    setMaxSolutions(count) {
      const max_solutions = Math.max(1, Math.floor(count) || 1);
      if (max_solutions !== this.state.designQuery.max_solutions) {
        this.set({ designQuery: { ...this.state.designQuery, max_solutions } });
      }
    }
    canSubmitDesign() {
      return this.state.designQuery.develop.length > 0;
    }
    async submitDesignQuery() {
      if (!this.canSubmitDesign()) return;
      try {
        const solution = await this.api.design(this.state.designQuery);
        this.set({ lastSolution: solution, error: null });
      } catch (error) {
        this.set({ error: describeError(error) });
      }
    }
  };
  function describeError(error) {
    if (error instanceof ApiError && error.issues.length) {
      return error.issues.map((i) => `${i.path}: ${i.message}`).join("; ");
    }
    return error instanceof Error ? error.message : String(error);
  }
  function normalizeProfile(profile) {
    return { ...profile, functionalities: [...profile.functionalities].sort() };
  }
  function applyEdit(profile, edit) {
    if (edit.kind === "toggle_functionality") {
      const present = profile.functionalities.includes(edit.name);
      const functionalities = present ? profile.functionalities.filter((f) => f !== edit.name) : [...profile.functionalities, edit.name].sort();
      return { ...profile, functionalities };
    }
    if (profile[edit.dimension] === edit.value) return null;
    return { ...profile, [edit.dimension]: edit.value };
  }
  function editForAtom(atom, profile) {
    if (atom.startsWith("functionality:")) {
      const name = atom.slice("functionality:".length);
      if (profile.functionalities.includes(name)) return null;
      return { kind: "toggle_functionality", name };
    }
    if (atom === "resettable") return { kind: "set", dimension: "resettability", value: "indirect" };
    if (atom === "observable") return { kind: "set", dimension: "observability", value: "total" };
    if (atom === "manifest") {
      return { kind: "set", dimension: "representation", value: "manifest_written" };
    }
    if (atom === "state_unknown") return { kind: "set", dimension: "state_unknown", value: true };
    if (atom === "rich_toolset") return null;
    const [family, value] = atom.split(":");
    if (!family || value === void 0) return null;
    if (family === "constraints") {
      return { kind: "set", dimension: "constrained", value: value === "constrained" };
    }
    const scalar = family;
    return { kind: "set", dimension: scalar, value };
  }
  function changedDimensions(a, b) {
    const dims = [
      "resettability",
      "observability",
      "cardinality",
      "explicitness",
      "constrained",
      "representation",
      "state_unknown"
    ];
    return dims.filter((dim) => a[dim] !== b[dim]);
  }
  function functionalityDelta(a, b) {
    const first = new Set(a.functionalities);
    const second = new Set(b.functionalities);
    return {
      added: [...second].filter((f) => !first.has(f)).sort(),
      removed: [...first].filter((f) => !second.has(f)).sort()
    };
  }

  // src/render.ts
  var SCALAR_OPTIONS = {
    domain: ["unplugged", "robotic", "virtual"],
    resettability: ["direct", "indirect", "none"],
    observability: ["total", "partial", "none"],
    cardinality: ["one_to_one", "many_to_one", "many_to_many"],
    explicitness: ["explicit", "implicit"],
    constrained: [true, false],
    representation: ["manifest_written", "manifest_non_written", "latent"],
    state_unknown: [true, false]
  };
  function el(tag, attrs = {}, ...children) {
    const node = document.createElement(tag);
    for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
    node.append(...children);
    return node;
  }
  function leavesOf(catalog) {
    const parents = new Set(catalog.competencies.map((c) => c.parent).filter(Boolean));
    return catalog.competencies.filter((c) => !parents.has(c.id)).map((c) => c.id);
  }
  function renderFixtureBrowser(fixtures, state, actions) {
    const list = el("ul", { class: "fixture-list" });
    for (const fixture of fixtures) {
      const button = el("button", { "data-fixture": fixture.name }, fixture.name);
      button.addEventListener("click", () => actions.loadFixture(fixture.name));
      if (state.loadedFixture === fixture.name) button.classList.add("selected");
      const tags = fixture.group ? `${fixture.domain} \xB7 ${fixture.group}` : fixture.domain;
      list.append(el("li", {}, button, el("small", {}, ` ${tags}`)));
    }
    return el("section", { class: "fixtures" }, el("h2", {}, "Activities"), list);
  }
  function renderProfileEditor(state, actions) {
    const profile = state.draftProfile;
    const form = el("section", { class: "profile-editor" }, el("h2", {}, "Characteristics"));
    const funcRow = el("div", { class: "functionalities" });
    for (const name of FUNCTIONALITIES) {
      const input = el("input", { type: "checkbox", "data-functionality": name });
      input.checked = profile.functionalities.includes(name);
      input.addEventListener("change", () => actions.edit({ kind: "toggle_functionality", name }));
      funcRow.append(el("label", {}, input, name));
    }
    form.append(el("div", { class: "dimension" }, el("span", {}, "functionalities"), funcRow));
    for (const dimension of Object.keys(SCALAR_OPTIONS)) {
      const select = el("select", { "data-dimension": dimension });
      for (const option of SCALAR_OPTIONS[dimension]) {
        select.append(el("option", { value: String(option) }, String(option)));
      }
      select.value = String(profile[dimension]);
      select.addEventListener("change", () => {
        const raw = select.value;
        const value = dimension === "constrained" || dimension === "state_unknown" ? raw === "true" : raw;
        actions.edit({ kind: "set", dimension, value });
      });
      const row = el("div", { class: "dimension" }, el("span", {}, dimension), select);
      if (state.baselineProfile && changedDimensions(state.baselineProfile, profile).includes(dimension)) {
        row.classList.add("changed");
      }
      form.append(row);
    }
    return form;
  }
  function reasonText(kind) {
    if (kind === "missing_required") return "missing";
    if (kind === "missing_any_group") return "needs one of";
    return "inhibited by";
  }
  function renderReport(report, state, actions) {
    const section = el("section", { class: "report" }, el("h2", {}, "Competencies"));
    if (!report) {
      section.append(el("p", {}, "No report yet."));
      return section;
    }
    const table = el(
      "table",
      {},
      el("thead", {}, el(
        "tr",
        {},
        el("th", {}, "competency"),
        el("th", {}, "status"),
        el("th", {}, "why / hints"),
        el("th", {}, "support")
      ))
    );
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
      row.append(el(
        "td",
        {},
        result.support_score ? `${result.support_score} (${result.supporters_present.join(", ")})` : "0"
      ));
      body.append(row);
    }
    table.append(body);
    section.append(table);
    return section;
  }
  function renderBaselineDiff(state) {
    const section = el("section", { class: "baseline-diff" });
    if (!state.baselineProfile || !state.dirty) return section;
    const changed = changedDimensions(state.baselineProfile, state.draftProfile);
    const delta = functionalityDelta(state.baselineProfile, state.draftProfile);
    if (!changed.length && !delta.added.length && !delta.removed.length) return section;
    section.append(el("h3", {}, `Changes vs ${state.loadedFixture ?? "baseline"}`));
    const list = el("ul", {});
    for (const dimension of changed) {
      list.append(el(
        "li",
        { class: "changed-row", "data-dimension": dimension },
        `${dimension}: ${String(state.baselineProfile[dimension])} -> ${String(state.draftProfile[dimension])}`
      ));
    }
    if (delta.added.length) {
      list.append(el(
        "li",
        { class: "changed-row", "data-dimension": "functionalities" },
        `functionalities added: ${delta.added.join(", ")}`
      ));
    }
    if (delta.removed.length) {
      list.append(el(
        "li",
        { class: "changed-row", "data-dimension": "functionalities" },
        `functionalities removed: ${delta.removed.join(", ")}`
      ));
    }
    section.append(list);
    return section;
  }
  function renderDesignForm(leaves, state, actions) {
    const query = state.designQuery;
    const section = el("section", { class: "design-form" }, el("h2", {}, "Target competencies"));
    const table = el("table", {}, el("thead", {}, el(
      "tr",
      {},
      el("th", {}, "competency"),
      el("th", {}, "develop"),
      el("th", {}, "avoid")
    )));
    const body = el("tbody", {});
    for (const leaf of leaves) {
      const develop = el("input", { type: "checkbox", "data-develop": leaf });
      develop.checked = query.develop.includes(leaf);
      develop.addEventListener("change", () => actions.toggleTarget("develop", leaf));
      const avoid = el("input", { type: "checkbox", "data-avoid": leaf });
      avoid.checked = query.avoid.includes(leaf);
      avoid.addEventListener("change", () => actions.toggleTarget("avoid", leaf));
      body.append(el("tr", {}, el("td", {}, leaf), el("td", {}, develop), el("td", {}, avoid)));
    }
    table.append(body);
    const locks = el("div", { class: "locks" }, el("h3", {}, "Locked dimensions"));
    const lockable = [
      "functionalities",
      "resettability",
      "observability",
      "cardinality",
      "explicitness",
      "constrained",
      "representation",
      "state_unknown",
      "domain"
    ];
    for (const dimension of lockable) {
      const input = el("input", { type: "checkbox", "data-lock": dimension });
      input.checked = dimension in query.locked;
      input.addEventListener("change", () => actions.toggleLock(dimension, input.checked));
      locks.append(el("label", {}, input, `${dimension} (from draft)`));
    }
    const max = el("input", {
      type: "number",
      min: "1",
      value: String(query.max_solutions),
      "data-max-solutions": ""
    });
    max.addEventListener("change", () => actions.setMaxSolutions(Number(max.value)));
    const maxRow = el("label", { class: "max-solutions" }, "candidates to list ", max);
    const submit = el("button", { class: "submit-design" }, "Find designs");
    submit.disabled = query.develop.length === 0;
    submit.addEventListener("click", () => actions.submitDesign());
    section.append(table, locks, maxRow, submit);
    return section;
  }
  function renderSolution(solution, actions) {
    const section = el("section", { class: "solution" });
    if (!solution) return section;
    section.append(el("h2", {}, "Design solution"));
    const constraints = el("ul", { class: "constraints" });
    constraints.append(el("li", {}, `must: ${solution.constraints.must.join(", ") || "(none)"}`));
    constraints.append(el(
      "li",
      {},
      `must not: ${solution.constraints.must_not.join(", ") || "(none)"}`
    ));
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
      const load = el(
        "button",
        { class: "load-candidate", "data-candidate": String(index) },
        "open in analyze mode"
      );
      load.addEventListener("click", () => actions.loadCandidate(ranked.profile));
      const summary = `${ranked.profile.resettability}, ${ranked.profile.representation}, ${ranked.profile.constrained ? "constrained" : "unconstrained"}, ${ranked.profile.functionalities.length} functionalities \u2014 support ${ranked.support_total}`;
      list.append(el("li", {}, el("span", {}, summary), load));
    });
    section.append(list);
    return section;
  }
  function renderError(state) {
    const box = el("div", { class: "error", role: "alert" });
    if (state.error) box.append(`Engine rejected the request: ${state.error}`);
    return box;
  }
  function renderModeSwitch(state, actions) {
    const bar = el("nav", { class: "mode-switch" });
    for (const mode of ["analyze", "design"]) {
      const button = el("button", { "data-mode": mode }, mode);
      if (state.mode === mode) button.classList.add("selected");
      button.addEventListener("click", () => actions.setMode(mode));
      bar.append(button);
    }
    return bar;
  }
  function renderApp(root, state, fixtures, leaves, actions) {
    root.replaceChildren(renderModeSwitch(state, actions), renderError(state));
    if (state.mode === "analyze") {
      root.append(
        renderFixtureBrowser(fixtures, state, actions),
        renderProfileEditor(state, actions),
        renderBaselineDiff(state),
        renderReport(state.liveReport, state, actions)
      );
    } else {
      root.append(
        renderDesignForm(leaves, state, actions),
        renderSolution(state.lastSolution, actions)
      );
    }
  }

  // src/url.ts
  function encode(value) {
    const json = JSON.stringify(value);
    return btoa(unescape(encodeURIComponent(json))).replaceAll("+", "-").replaceAll("/", "_").replace(/=+$/, "");
  }
  function decode(text) {
    const base64 = text.replaceAll("-", "+").replaceAll("_", "/");
    return JSON.parse(decodeURIComponent(escape(atob(base64))));
  }
  function serializeState(state) {
    const params = new URLSearchParams();
    params.set("mode", state.mode);
    params.set("draft", encode(state.draftProfile));
    params.set("query", encode(state.designQuery));
    if (state.loadedFixture) params.set("fixture", state.loadedFixture);
    return params.toString();
  }
  function restoreState(hash) {
    const params = new URLSearchParams(hash.replace(/^#/, ""));
    const mode = params.get("mode") === "design" ? "design" : "analyze";
    let draftProfile = { ...DEFAULT_PROFILE };
    let designQuery = emptyQuery();
    try {
      const draft = params.get("draft");
      if (draft) draftProfile = decode(draft);
      const query = params.get("query");
      if (query) designQuery = decode(query);
    } catch {
    }
    return {
      mode,
      draftProfile,
      designQuery,
      loadedFixture: params.get("fixture")
    };
  }

  // src/main.ts
  async function boot() {
    const api = createApiClient();
    const store = new Store(api);
    const [catalog, fixtures] = await Promise.all([api.catalog(), api.fixtures()]);
    const leaves = leavesOf(catalog);
    const mount = document.getElementById("app");
    if (!mount) throw new Error("missing #app element");
    const root = mount;
    const actions = createActions(store);
    const render = () => {
      const state = store.getState();
      renderApp(root, state, fixtures, leaves, actions);
      history.replaceState(null, "", `#${serializeState(state)}`);
    };
    store.subscribe(render);
    const shared = restoreState(location.hash);
    store.setMode(shared.mode);
    if (shared.designQuery.develop.length || shared.designQuery.avoid.length || Object.keys(shared.designQuery.locked).length) {
      for (const competency of shared.designQuery.develop) {
        store.toggleTarget("develop", competency);
      }
      for (const competency of shared.designQuery.avoid) {
        store.toggleTarget("avoid", competency);
      }
      for (const [dimension, value] of Object.entries(shared.designQuery.locked)) {
        store.setLock(dimension, value);
      }
      store.setMaxSolutions(shared.designQuery.max_solutions);
    }
    if (shared.loadedFixture) {
      await store.loadFixture(shared.loadedFixture);
      if (JSON.stringify(shared.draftProfile) !== JSON.stringify(store.getState().draftProfile)) {
        await store.loadCandidate(shared.draftProfile);
      }
    } else {
      await store.setDraft(shared.draftProfile);
    }
    render();
  }
  boot().catch((error) => {
    const root = document.getElementById("app");
    if (root) root.textContent = `Failed to start the studio: ${error}`;
  });
})();
