/**
 * Studio bootstrap: fetch the catalog and fixture index, restore any shared
 * state from the URL hash, then re-render on every store change and keep the
 * hash in sync so the current view is always shareable.
 */

import { createApiClient } from "./api";
import { createActions } from "./app";
import { leavesOf, renderApp } from "./render";
import { Store } from "./state";
import { restoreState, serializeState } from "./url";
import { Profile } from "./types";

async function boot(): Promise<void> {
  const api = createApiClient();
  const store = new Store(api);
  const [catalog, fixtures] = await Promise.all([api.catalog(), api.fixtures()]);
  const leaves = leavesOf(catalog);
  const mount = document.getElementById("app");
  if (!mount) throw new Error("missing #app element");
  const root: HTMLElement = mount;

  const actions = createActions(store);

  const render = (): void => {
    const state = store.getState();
    renderApp(root, state, fixtures, leaves, actions);
    history.replaceState(null, "", `#${serializeState(state)}`);
  };

  store.subscribe(render);

  const shared = restoreState(location.hash);
  store.setMode(shared.mode);
  if (shared.designQuery.develop.length || shared.designQuery.avoid.length
      || Object.keys(shared.designQuery.locked).length) {
    for (const competency of shared.designQuery.develop) {
      store.toggleTarget("develop", competency);
    }
    for (const competency of shared.designQuery.avoid) {
      store.toggleTarget("avoid", competency);
    }
    for (const [dimension, value] of Object.entries(shared.designQuery.locked)) {
      store.setLock(dimension as keyof Profile, value as Profile[keyof Profile]);
    }
    store.setMaxSolutions(shared.designQuery.max_solutions);
  }
  if (shared.loadedFixture) {
    await store.loadFixture(shared.loadedFixture);
    if (JSON.stringify(shared.draftProfile)
        !== JSON.stringify(store.getState().draftProfile)) {
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
