import { describe, expect, it } from "vitest";

import { DEFAULT_PROFILE, emptyQuery, StudioState } from "../src/state";
import { restoreState, serializeState } from "../src/url";
import { Profile } from "../src/types";

function stateWith(overrides: Partial<StudioState>): StudioState {
  return {
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
    ...overrides,
  };
}

describe("shareable URLs", () => {
  it("round-trips mode, draft, query and fixture", () => {
    const draft: Profile = {
      ...DEFAULT_PROFILE,
      functionalities: ["events", "parallelism"],
      resettability: "indirect",
      constrained: true,
    };
    const state = stateWith({
      mode: "design",
      draftProfile: draft,
      loadedFixture: "cat",
      designQuery: {
        develop: ["algorithm_debugging", "events"],
        avoid: ["conditionals"],
        locked: { representation: "manifest_written", state_unknown: false },
        max_solutions: 7,
      },
    });
    const restored = restoreState(`#${serializeState(state)}`);
    expect(restored.mode).toBe("design");
    expect(restored.draftProfile).toEqual(draft);
    expect(restored.designQuery).toEqual(state.designQuery);
    expect(restored.loadedFixture).toBe("cat");
  });

  it("defaults cleanly on an empty or malformed hash", () => {
    const empty = restoreState("");
    expect(empty.mode).toBe("analyze");
    expect(empty.draftProfile).toEqual(DEFAULT_PROFILE);
    expect(empty.loadedFixture).toBeNull();
    const mangled = restoreState("#mode=design&draft=%%%not-base64");
    expect(mangled.mode).toBe("design");
    expect(mangled.draftProfile).toEqual(DEFAULT_PROFILE);
  });

  it("serialization is deterministic", () => {
    const state = stateWith({ loadedFixture: "cat" });
    expect(serializeState(state)).toBe(serializeState(state));
  });
});
