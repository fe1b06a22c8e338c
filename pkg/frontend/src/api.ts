/**
 * Fetch-based API client. The studio talks to the engine exclusively
 * through these five endpoints; all competency statuses originate here.
 */

import {
  AnalysisReport,
  ApiClient,
  ApiError,
  Catalog,
  DesignQuery,
  DesignSolution,
  FixtureDetail,
  FixtureInfo,
  Profile,
} from "./types";

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const text = await response.text();
  if (!response.ok) {
    let issues = [];
    try {
      issues = JSON.parse(text).issues ?? [];
    } catch {
      // non-JSON error body; fall through with the status line only
    }
    throw new ApiError(`${init?.method ?? "GET"} ${url} -> ${response.status}`, issues);
  }
  return JSON.parse(text) as T;
}

function post<T>(url: string, body: unknown): Promise<T> {
  return request<T>(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export function createApiClient(base = ""): ApiClient {
  return {
    catalog: () => request<Catalog>(`${base}/api/catalog`),
    fixtures: async () => {
      const data = await request<{ fixtures: FixtureInfo[] }>(`${base}/api/fixtures`);
      return data.fixtures;
    },
    fixture: (name: string) =>
      request<FixtureDetail>(`${base}/api/fixtures/${encodeURIComponent(name)}`),
    analyze: (profile: Profile) => post<AnalysisReport>(`${base}/api/analyze`, profile),
    design: (query: DesignQuery) => post<DesignSolution>(`${base}/api/design`, query),
  };
}
