/**
 * Store-to-UI action wiring, shared by the page bootstrap and the UI tests.
 */

import { Actions } from "./render";
import { Store } from "./state";
import { Profile, ProfileEdit, ScalarDimension } from "./types";

export function createActions(store: Store): Actions {
  return {
    edit: (edit: ProfileEdit) => void store.applyProfileEdit(edit),
    loadFixture: (name: string) => void store.loadFixture(name),
    setMode: (mode) => store.setMode(mode),
    toggleTarget: (set, competency) => store.toggleTarget(set, competency),
    toggleLock: (dimension, on) => {
      if (dimension === "functionalities") {
        store.setLock("functionalities",
          on ? store.getState().draftProfile.functionalities : undefined);
      } else {
        const dim = dimension as ScalarDimension;
        store.setLock(dim, on ? store.getState().draftProfile[dim] : undefined);
      }
    },
    setMaxSolutions: (count) => store.setMaxSolutions(count),
    submitDesign: () => void store.submitDesignQuery(),
    loadCandidate: (profile: Profile) => void store.loadCandidate(profile),
  };
}
