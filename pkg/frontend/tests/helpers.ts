/**
 * Test doubles: a fully intercepted API client serving captured engine
 * responses, with call recording and manual response release for staleness
 * tests. No test ever reaches the network.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

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
} from "../src/types";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, name), "utf-8")) as T;
}

/** Key a profile by value, independent of property order. */
export function profileKey(profile: Profile): string {
  return JSON.stringify({
    domain: profile.domain,
    functionalities: [...profile.functionalities].sort(),
    resettability: profile.resettability,
    observability: profile.observability,
    cardinality: profile.cardinality,
    explicitness: profile.explicitness,
    constrained: profile.constrained,
    representation: profile.representation,
    state_unknown: profile.state_unknown,
  });
}

interface Deferred<T> {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (error: unknown) => void;
}

function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (error: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

export class FakeApi implements ApiClient {
  analyzeCalls: Profile[] = [];
  designCalls: DesignQuery[] = [];
  /** Every analyze payload handed back to the store, in delivery order. */
  deliveredReports: AnalysisReport[] = [];
  /** When true, analyze() promises wait until release() is called. */
  manualRelease = false;

  private reports = new Map<string, AnalysisReport>();
  private solutions: DesignSolution[] = [];
  private failNext: ApiError | null = null;
  private pending: { report: AnalysisReport; release: Deferred<AnalysisReport> }[] = [];

  constructor(
    private readonly catalogDoc: Catalog = loadFixture<Catalog>("catalog.json"),
    private readonly fixtureIndex: FixtureInfo[] =
      loadFixture<{ fixtures: FixtureInfo[] }>("fixtures.json").fixtures,
    private readonly fixtureDetails: Record<string, FixtureDetail> = {
      cat: loadFixture<FixtureDetail>("fixture_cat.json"),
    },
  ) {}

  addReport(report: AnalysisReport): void {
    this.reports.set(profileKey(report.profile), report);
  }

  queueSolution(solution: DesignSolution): void {
    this.solutions.push(solution);
  }

  failNextAnalyze(error: ApiError): void {
    this.failNext = error;
  }

  /** Resolve the oldest pending analyze call (manualRelease mode). */
  release(index = 0): void {
    const entry = this.pending.splice(index, 1)[0];
    if (!entry) throw new Error("no pending analyze call");
    this.deliveredReports.push(entry.report);
    entry.release.resolve(entry.report);
  }

  pendingCount(): number {
    return this.pending.length;
  }

  catalog(): Promise<Catalog> {
    return Promise.resolve(this.catalogDoc);
  }

  fixtures(): Promise<FixtureInfo[]> {
    return Promise.resolve(this.fixtureIndex);
  }

  fixture(name: string): Promise<FixtureDetail> {
    const detail = this.fixtureDetails[name];
    if (!detail) return Promise.reject(new ApiError(`GET fixture ${name} -> 404`));
    return Promise.resolve(detail);
  }

  analyze(profile: Profile): Promise<AnalysisReport> {
    this.analyzeCalls.push(profile);
    if (this.failNext) {
      const error = this.failNext;
      this.failNext = null;
      return Promise.reject(error);
    }
    const report = this.reports.get(profileKey(profile));
    if (!report) {
      return Promise.reject(new ApiError(`no canned report for ${profileKey(profile)}`));
    }
    if (this.manualRelease) {
      const release = deferred<AnalysisReport>();
      this.pending.push({ report, release });
      return release.promise;
    }
    this.deliveredReports.push(report);
    return Promise.resolve(report);
  }

  design(query: DesignQuery): Promise<DesignSolution> {
    this.designCalls.push(query);
    const solution = this.solutions.shift();
    if (!solution) return Promise.reject(new ApiError("no canned solution queued"));
    return Promise.resolve(solution);
  }
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
