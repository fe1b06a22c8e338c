/**
 * Shareable URLs. The whole reachable state (mode + draft profile + design
 * query + loaded fixture) round-trips through the location hash; reports and
 * solutions are refetched on restore, never encoded.
 */

import { StudioState, Mode, DEFAULT_PROFILE, emptyQuery } from "./state";
import { DesignQuery, Profile } from "./types";

export interface SharedState {
  mode: Mode;
  draftProfile: Profile;
  designQuery: DesignQuery;
  loadedFixture: string | null;
}

function encode(value: unknown): string {
  const json = JSON.stringify(value);
  return btoa(unescape(encodeURIComponent(json)))
    .replaceAll("+", "-").replaceAll("/", "_").replace(/=+$/, "");
}

function decode<T>(text: string): T {
  const base64 = text.replaceAll("-", "+").replaceAll("_", "/");
  return JSON.parse(decodeURIComponent(escape(atob(base64)))) as T;
}

export function serializeState(state: StudioState): string {
  const params = new URLSearchParams();
  params.set("mode", state.mode);
  params.set("draft", encode(state.draftProfile));
  params.set("query", encode(state.designQuery));
  if (state.loadedFixture) params.set("fixture", state.loadedFixture);
  return params.toString();
}

export function restoreState(hash: string): SharedState {
  const params = new URLSearchParams(hash.replace(/^#/, ""));
  const mode: Mode = params.get("mode") === "design" ? "design" : "analyze";
  let draftProfile: Profile = { ...DEFAULT_PROFILE };
  let designQuery: DesignQuery = emptyQuery();
  try {
    const draft = params.get("draft");
    if (draft) draftProfile = decode<Profile>(draft);
    const query = params.get("query");
    if (query) designQuery = decode<DesignQuery>(query);
  } catch {
    // malformed share link: keep defaults for whatever failed to decode
  }
  return {
    mode,
    draftProfile,
    designQuery,
    loadedFixture: params.get("fixture"),
  };
}
