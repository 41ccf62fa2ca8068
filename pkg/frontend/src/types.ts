/** Wire types mirroring the JSON documents served under /api/v1. */

export type Polarity = "benefit" | "cost";
export type Effect = "positive" | "negative";

export interface QaDocument {
  id: string;
  name: string;
  polarity: Polarity;
}

export interface ImpactDocument {
  qa: string;
  effect: Effect;
  phrase: string;
  condition?: Record<string, string>;
}

export interface ConstraintDocument {
  id: string;
  description: string;
  guard: Record<string, string>;
  severity: "hard" | "soft";
}

export interface PatternDocument {
  id: string;
  name: string;
  kind: string;
  summary: string;
  /** Empty collections are omitted from the served document. */
  impacts?: ImpactDocument[];
  constraints?: ConstraintDocument[];
  complements?: string[];
  sources?: string[];
}

export type NodeKind = "start" | "xor" | "or" | "and" | "pattern";

export interface NodeDocument {
  id: string;
  kind: NodeKind;
  pattern?: string;
}

export interface EdgeDocument {
  from: string;
  to: string;
  /** A clause map, the literal string "otherwise", or absent for unguarded. */
  guard?: Record<string, string> | "otherwise";
}

export interface ModelMetadata {
  id: string;
  title: string;
  version: string;
}

export interface ModelDocument {
  metadata: ModelMetadata;
  qas: QaDocument[];
  patterns: PatternDocument[];
  nodes: NodeDocument[];
  edges: EdgeDocument[];
  /** Fact name to its ordered value domain. */
  context_facts: Record<string, string[]>;
}

export interface Requirements {
  weights: Record<string, number>;
  context: Record<string, string>;
}

export interface Contribution {
  qa: string;
  weight: number;
  effect: Effect;
  value: number;
}

export interface ReportWarning {
  code: string;
  message: string;
}

export interface ReportEntry {
  pattern: string;
  score: number;
  contributions: Contribution[];
  warnings: ReportWarning[];
  complements: string[];
}

export interface ActivatedEdge {
  from: string;
  to: string;
  outcome: string;
}

export interface ExclusionRecord {
  pattern: string;
  reason: string;
}

export interface EligibilityTrace {
  visited: string[];
  activated_edges: ActivatedEdge[];
  excluded: ExclusionRecord[];
}

export interface RecommendationReport {
  model_version: string;
  entries: ReportEntry[];
  trace: EligibilityTrace;
  warnings: ReportWarning[];
}

export type WhatifStatus =
  | "promoted"
  | "demoted"
  | "unchanged"
  | "entered"
  | "left";

export interface WhatifEntry {
  pattern: string;
  base_rank: number | null;
  variant_rank: number | null;
  base_score: number | null;
  variant_score: number | null;
  status: WhatifStatus;
}

export interface WhatifReport {
  base_digest: string;
  variant_digest: string;
  entries: WhatifEntry[];
}

export interface MatrixCell {
  effect: Effect;
  condition?: string;
}

export interface MatrixDocument {
  rows: string[];
  columns: string[];
  cells: (MatrixCell | null)[][];
}

export interface ErrorBody {
  code: string;
  message: string;
  details?: Record<string, unknown>;
}
