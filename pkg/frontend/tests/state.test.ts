import { describe, expect, it } from "vitest";

import { applyEdit, changedDimensions, editForAtom, Store } from "../src/state";
import { AnalysisReport, ApiError, FixtureDetail, Profile } from "../src/types";
import { FakeApi, flush, loadFixture } from "./helpers";

const catDetail = loadFixture<FixtureDetail>("fixture_cat.json");
const catReport = loadFixture<AnalysisReport>("analyze_cat.json");
const indirectReport = loadFixture<AnalysisReport>("analyze_cat_indirect.json");

function storeWithCat(): { store: Store; api: FakeApi } {
  const api = new FakeApi();
  api.addReport(catReport);
  api.addReport(indirectReport);
  return { store: new Store(api), api };
}

describe("profile editing", () => {
  it("loads a fixture and fetches its report", async () => {
    const { store, api } = storeWithCat();
    await store.loadFixture("cat");
    expect(api.analyzeCalls).toHaveLength(1);
    expect(store.getState().loadedFixture).toBe("cat");
    expect(store.getState().liveReport).toEqual(catReport);
    expect(store.getState().dirty).toBe(false);
  });

  it("an edit issues exactly one request and replaces the live report", async () => {
    const { store, api } = storeWithCat();
    await store.loadFixture("cat");
    await store.applyProfileEdit(
      { kind: "set", dimension: "resettability", value: "indirect" });
    expect(api.analyzeCalls).toHaveLength(2);
    expect(store.getState().liveReport).toEqual(indirectReport);
    expect(store.getState().dirty).toBe(true);
  });

  it("re-applying the current value changes nothing and sends nothing", async () => {
    const { store, api } = storeWithCat();
    await store.loadFixture("cat");
    const before = store.getState();
    await store.applyProfileEdit(
      { kind: "set", dimension: "resettability", value: "none" });
    expect(store.getState()).toBe(before);
    expect(api.analyzeCalls).toHaveLength(1); // only the fixture load
  });

  it("discards stale responses: last edit wins regardless of arrival order", async () => {
    const { store, api } = storeWithCat();
    await store.loadFixture("cat");
    api.manualRelease = true;
    const first = store.applyProfileEdit(
      { kind: "set", dimension: "resettability", value: "indirect" });
    const second = store.applyProfileEdit(
      { kind: "set", dimension: "resettability", value: "none" });
    expect(api.pendingCount()).toBe(2);
    api.release(1); // the newer request answers first
    await flush();
    api.release(0); // the stale response arrives late
    await Promise.all([first, second]);
    expect(store.getState().liveReport).toEqual(catReport);
    expect(store.getState().draftProfile.resettability).toBe("none");
  });

  it("a rejected analyze surfaces inline and keeps the draft", async () => {
    const { store, api } = storeWithCat();
    await store.loadFixture("cat");
    api.failNextAnalyze(new ApiError("POST /api/analyze -> 400", [
      { code: "UnknownEnum", path: "profile.resettability", message: "bad value" },
    ]));
    await store.applyProfileEdit(
      { kind: "set", dimension: "resettability", value: "indirect" });
    const state = store.getState();
    expect(state.error).toContain("profile.resettability");
    expect(state.draftProfile.resettability).toBe("indirect");
    expect(state.liveReport).toEqual(catReport); // previous report retained
  });
});

describe("design query editing", () => {
  it("develop and avoid stay disjoint at input time", () => {
    const { store } = storeWithCat();
    store.toggleTarget("develop", "events");
    store.toggleTarget("avoid", "events");
    expect(store.getState().designQuery.develop).toEqual([]);
    expect(store.getState().designQuery.avoid).toEqual(["events"]);
    store.toggleTarget("develop", "events");
    expect(store.getState().designQuery.develop).toEqual(["events"]);
    expect(store.getState().designQuery.avoid).toEqual([]);
  });

  it("submit is a no-op while develop is empty", async () => {
    const { store, api } = storeWithCat();
    expect(store.canSubmitDesign()).toBe(false);
    await store.submitDesignQuery();
    expect(api.designCalls).toHaveLength(0);
  });

  it("clamps the candidate count to a positive integer", () => {
    const { store } = storeWithCat();
    store.setMaxSolutions(7.9);
    expect(store.getState().designQuery.max_solutions).toBe(7);
    store.setMaxSolutions(-3);
    expect(store.getState().designQuery.max_solutions).toBe(1);
  });
});

describe("edit helpers", () => {
  const profile: Profile = catDetail.profile;

  it("applyEdit returns null for no-op scalar edits", () => {
    expect(applyEdit(profile, { kind: "set", dimension: "observability", value: "partial" }))
      .toBeNull();
    expect(applyEdit(profile, { kind: "set", dimension: "observability", value: "total" }))
      .not.toBeNull();
  });

  it("maps missing atoms to the edit that satisfies them", () => {
    expect(editForAtom("functionality:events", profile)).toEqual(
      { kind: "toggle_functionality", name: "events" });
    expect(editForAtom("resettable", profile)).toEqual(
      { kind: "set", dimension: "resettability", value: "indirect" });
    expect(editForAtom("state_unknown", profile)).toEqual(
      { kind: "set", dimension: "state_unknown", value: true });
    expect(editForAtom("constraints:constrained", profile)).toEqual(
      { kind: "set", dimension: "constrained", value: true });
    expect(editForAtom("representation:manifest_written", profile)).toEqual(
      { kind: "set", dimension: "representation", value: "manifest_written" });
    expect(editForAtom("rich_toolset", profile)).toBeNull();
  });

  it("changedDimensions ignores equal dimensions and the domain", () => {
    const variant: Profile = {
      ...profile,
      domain: "virtual",
      resettability: "indirect",
      constrained: true,
      representation: "manifest_written",
    };
    expect(changedDimensions(profile, variant)).toEqual(
      ["resettability", "constrained", "representation"]);
  });
});
