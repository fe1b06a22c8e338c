/**
 * Payload types mirroring the engine's JSON API.
 * The studio never computes activation itself; these are pure wire shapes.
 */

export type Domain = "unplugged" | "robotic" | "virtual";
export type Resettability = "direct" | "indirect" | "none";
export type Observability = "total" | "partial" | "none";
export type Cardinality = "one_to_one" | "many_to_one" | "many_to_many";
export type Explicitness = "explicit" | "implicit";
export type Representation = "manifest_written" | "manifest_non_written" | "latent";

export const FUNCTIONALITIES = [
  "variables", "operators", "sequences", "repetitions",
  "conditionals", "functions", "parallelism", "events",
] as const;
export type Functionality = (typeof FUNCTIONALITIES)[number];

export interface Profile {
  domain: Domain;
  functionalities: Functionality[];
  resettability: Resettability;
  observability: Observability;
  cardinality: Cardinality;
  explicitness: Explicitness;
  constrained: boolean;
  representation: Representation;
  state_unknown: boolean;
}

/** Profile dimensions other than the functionality set. */
export type ScalarDimension =
  | "domain" | "resettability" | "observability" | "cardinality"
  | "explicitness" | "constrained" | "representation" | "state_unknown";

export type ProfileEdit =
  | { kind: "set"; dimension: ScalarDimension; value: Profile[ScalarDimension] }
  | { kind: "toggle_functionality"; name: Functionality };

export interface Reason {
  kind: "missing_required" | "missing_any_group" | "inhibited";
  atoms: string[];
}

export interface LeafResult {
  status: "activable" | "blocked";
  reasons: Reason[];
  support_score: number;
  supporters_present: string[];
}

export interface AnalysisReport {
  profile: Profile;
  ruleset: { name: string; version: number; notes: string };
  results: Record<string, LeafResult>;
}

export interface DesignQuery {
  develop: string[];
  avoid: string[];
  locked: Partial<Profile>;
  max_solutions: number;
}

export interface Conflict {
  competency_a: string;
  competency_b: string | null;
  atom: string;
  explanation: string;
}

export interface RankedProfile {
  profile: Profile;
  support_total: number;
}

export interface DesignSolution {
  constraints: { must: string[]; must_not: string[]; choose_one_of: string[][] };
  conflicts: Conflict[];
  profiles: RankedProfile[];
  feasible: boolean;
}

export interface FixtureInfo {
  name: string;
  group: string | null;
  domain: Domain;
}

export interface FixtureDetail extends FixtureInfo {
  descriptor: unknown;
  profile: Profile;
}

export interface CompetencyNode {
  id: string;
  label: string;
  parent: string | null;
  definition: string;
}

export interface Catalog {
  competencies: CompetencyNode[];
  atoms: { name: string; family: string | null; alias: boolean }[];
}

export interface ApiIssue {
  code: string;
  path: string;
  message: string;
}

/** Thrown by the API client on 4xx responses carrying an issue list. */
export class ApiError extends Error {
  readonly issues: ApiIssue[];

  constructor(message: string, issues: ApiIssue[] = []) {
    super(message);
    this.issues = issues;
  }
}

export interface ApiClient {
  catalog(): Promise<Catalog>;
  fixtures(): Promise<FixtureInfo[]>;
  fixture(name: string): Promise<FixtureDetail>;
  analyze(profile: Profile): Promise<AnalysisReport>;
  design(query: DesignQuery): Promise<DesignSolution>;
}
