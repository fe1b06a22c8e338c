/**
 * Studio state and transitions.
 *
 * The store owns a draft profile (analyze mode) and a design query draft
 * (design mode). Every competency status shown anywhere comes from an
 * engine response stored here; the store never evaluates rules. Analyze
 * responses are tagged with a draft revision counter so a stale response
 * can never overwrite the report of a newer draft.
 */

import {
  AnalysisReport,
  ApiClient,
  ApiError,
  DesignQuery,
  DesignSolution,
  FUNCTIONALITIES,
  Functionality,
  Profile,
  ProfileEdit,
  ScalarDimension,
} from "./types";

export type Mode = "analyze" | "design";

export interface StudioState {
  mode: Mode;
  draftProfile: Profile;
  liveReport: AnalysisReport | null;
  designQuery: DesignQuery;
  lastSolution: DesignSolution | null;
  loadedFixture: string | null;
  /** Profile of the loaded fixture; drafts and candidates diff against it. */
  baselineProfile: Profile | null;
  dirty: boolean;
  error: string | null;
  /** Revision of the draft the current liveReport corresponds to. */
  reportRevision: number;
}

export const DEFAULT_PROFILE: Profile = {
  domain: "unplugged",
  functionalities: ["operators", "sequences", "variables"],
  resettability: "none",
  observability: "total",
  cardinality: "one_to_one",
  explicitness: "explicit",
  constrained: false,
  representation: "manifest_non_written",
  state_unknown: false,
};

export function emptyQuery(): DesignQuery {
  return { develop: [], avoid: [], locked: {}, max_solutions: 20 };
}

type Listener = (state: StudioState) => void;

export class Store {
  private state: StudioState;
  private revision = 0;
  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {
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
      reportRevision: 0,
    };
  }

  getState(): StudioState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(patch: Partial<StudioState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  setMode(mode: Mode): void {
    if (mode !== this.state.mode) this.set({ mode });
  }

  /** Replace the draft wholesale and refetch its report. */
  async setDraft(profile: Profile, opts?: { fixture?: string | null; baseline?: Profile | null }): Promise<void> {
    this.set({
      draftProfile: normalizeProfile(profile),
      loadedFixture: opts?.fixture !== undefined ? opts.fixture : this.state.loadedFixture,
      baselineProfile: opts?.baseline !== undefined ? opts.baseline : this.state.baselineProfile,
      dirty: false,
      error: null,
    });
    await this.refreshReport();
  }

  async loadFixture(name: string): Promise<void> {
    const detail = await this.api.fixture(name);
    await this.setDraft(detail.profile, { fixture: name, baseline: detail.profile });
  }

  /** Bring a design candidate into analyze mode (baseline stays the fixture). */
  async loadCandidate(profile: Profile): Promise<void> {
    this.set({ mode: "analyze", dirty: true, error: null });
    await this.setDraftKeepDirty(profile);
  }

  private async setDraftKeepDirty(profile: Profile): Promise<void> {
    this.set({ draftProfile: normalizeProfile(profile) });
    await this.refreshReport();
  }

  /**
   * Apply a single dimension/functionality change. Re-applying the current
   * value is a no-op: no state change and no request. Otherwise the draft
   * advances one revision and a fresh report is requested; responses to
   * older revisions are discarded on arrival.
   */
  async applyProfileEdit(edit: ProfileEdit): Promise<void> {
    const next = applyEdit(this.state.draftProfile, edit);
    if (next === null) return; // idempotent re-application
    this.set({ draftProfile: next, dirty: true, error: null });
    await this.refreshReport();
  }

  private async refreshReport(): Promise<void> {
    const tag = ++this.revision;
    try {
      const report = await this.api.analyze(this.state.draftProfile);
      if (tag !== this.revision) return; // stale: a newer draft exists
      this.set({ liveReport: report, reportRevision: tag, error: null });
    } catch (error) {
      if (tag !== this.revision) return;
      this.set({ error: describeError(error) }); // draft kept as-is
    }
  }

  // -- design mode -------------------------------------------------------

  /** Toggle a competency in develop/avoid; the two sets stay disjoint. */
  toggleTarget(set: "develop" | "avoid", competency: string): void {
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
      designQuery: { ...query, develop: [...develop].sort(), avoid: [...avoid].sort() },
    });
  }

  setLock(dimension: keyof Profile, value: Profile[keyof Profile] | undefined): void {
    const locked = { ...this.state.designQuery.locked };
    if (value === undefined) {
      delete locked[dimension];
    } else {
      (locked as Record<string, unknown>)[dimension] = value;
    }
    this.set({ designQuery: { ...this.state.designQuery, locked } });
  }

  setMaxSolutions(count: number): void {
    const max_solutions = Math.max(1, Math.floor(count) || 1);
    if (max_solutions !== this.state.designQuery.max_solutions) {
      this.set({ designQuery: { ...this.state.designQuery, max_solutions } });
    }
  }

  canSubmitDesign(): boolean {
    return this.state.designQuery.develop.length > 0;
  }

  async submitDesignQuery(): Promise<void> {
    if (!this.canSubmitDesign()) return; // submit is disabled in the UI
    try {
      const solution = await this.api.design(this.state.designQuery);
      this.set({ lastSolution: solution, error: null });
    } catch (error) {
      this.set({ error: describeError(error) });
    }
  }
}

function describeError(error: unknown): string {
  if (error instanceof ApiError && error.issues.length) {
    return error.issues.map((i) => `${i.path}: ${i.message}`).join("; ");
  }
  return error instanceof Error ? error.message : String(error);
}

function normalizeProfile(profile: Profile): Profile {
  return { ...profile, functionalities: [...profile.functionalities].sort() };
}

/** Returns the edited profile, or null when the edit changes nothing. */
export function applyEdit(profile: Profile, edit: ProfileEdit): Profile | null {
  if (edit.kind === "toggle_functionality") {
    const present = profile.functionalities.includes(edit.name);
    const functionalities = present
      ? profile.functionalities.filter((f) => f !== edit.name)
      : [...profile.functionalities, edit.name].sort();
    return { ...profile, functionalities };
  }
  if (profile[edit.dimension] === edit.value) return null;
  return { ...profile, [edit.dimension]: edit.value };
}

/**
 * Map a missing atom (from a blocked competency's reasons) to the edit that
 * would satisfy it. Returns null for atoms with no single-edit fix.
 */
export function editForAtom(atom: string, profile: Profile): ProfileEdit | null {
  if (atom.startsWith("functionality:")) {
    const name = atom.slice("functionality:".length) as Functionality;
    if (profile.functionalities.includes(name)) return null;
    return { kind: "toggle_functionality", name };
  }
  if (atom === "resettable") return { kind: "set", dimension: "resettability", value: "indirect" };
  if (atom === "observable") return { kind: "set", dimension: "observability", value: "total" };
  if (atom === "manifest") {
    return { kind: "set", dimension: "representation", value: "manifest_written" };
  }
  if (atom === "state_unknown") return { kind: "set", dimension: "state_unknown", value: true };
  if (atom === "rich_toolset") return null; // needs several functionality edits
  const [family, value] = atom.split(":");
  if (!family || value === undefined) return null;
  if (family === "constraints") {
    return { kind: "set", dimension: "constrained", value: value === "constrained" };
  }
  const scalar = family as ScalarDimension;
  return { kind: "set", dimension: scalar, value: value as Profile[ScalarDimension] };
}

/** Dimensions on which two profiles differ (functionalities handled apart). */
export function changedDimensions(a: Profile, b: Profile): ScalarDimension[] {
  const dims: ScalarDimension[] = [
    "resettability", "observability", "cardinality", "explicitness",
    "constrained", "representation", "state_unknown",
  ];
  return dims.filter((dim) => a[dim] !== b[dim]);
}

export function functionalityDelta(a: Profile, b: Profile): { added: string[]; removed: string[] } {
  const first = new Set(a.functionalities);
  const second = new Set(b.functionalities);
  return {
    added: [...second].filter((f) => !first.has(f)).sort(),
    removed: [...first].filter((f) => !second.has(f)).sort(),
  };
}

export { FUNCTIONALITIES };
