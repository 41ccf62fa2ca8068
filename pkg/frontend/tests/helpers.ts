import type { ApiClient } from "../src/api.js";
import type {
  MatrixDocument,
  ModelDocument,
  RecommendationReport,
  ReportEntry,
  Requirements,
  WhatifReport,
} from "../src/types.js";

export interface Deferred<T> {
  promise: Promise<T>;
  resolve(value: T): void;
  reject(reason?: unknown): void;
}

export function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (reason?: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

/** Yield enough microtask turns for settled promise chains to run. */
export async function settle(turns = 10): Promise<void> {
  for (let i = 0; i < turns; i += 1) {
    await Promise.resolve();
  }
}

export function makeEntry(
  pattern: string,
  score: number,
  extra: Partial<ReportEntry> = {},
): ReportEntry {
  return {
    pattern,
    score,
    contributions: [],
    warnings: [],
    complements: [],
    ...extra,
  };
}

export function makeReport(
  entries: ReportEntry[],
  modelVersion = "1.0.0",
): RecommendationReport {
  return {
    model_version: modelVersion,
    entries,
    trace: { visited: [], activated_edges: [], excluded: [] },
    warnings: [],
  };
}

/** Tiny but complete model: two patterns, three QAs, one fact, one gateway. */
export function syntheticModel(): ModelDocument {
  return {
    metadata: { id: "synthetic", title: "Synthetic advisor", version: "9.9.9" },
    qas: [
      { id: "speed", name: "Speed", polarity: "benefit" },
      { id: "safety", name: "Safety", polarity: "benefit" },
      { id: "effort", name: "Effort", polarity: "cost" },
    ],
    patterns: [
      {
        id: "alpha",
        name: "Alpha split",
        kind: "pattern",
        summary: "Split along the alpha seams.",
        impacts: [
          { qa: "speed", effect: "positive", phrase: "alpha makes things quick" },
          { qa: "effort", effect: "negative", phrase: "alpha takes elbow grease" },
        ],
        constraints: [
          {
            id: "alpha_ready",
            description: "The team must be ready for alpha.",
            guard: { maturity: "high" },
            severity: "hard",
          },
        ],
        complements: ["beta"],
        sources: ["Synthetic handbook"],
      },
      {
        id: "beta",
        name: "Beta split",
        kind: "pattern",
        summary: "Split along the beta seams.",
        impacts: [{ qa: "safety", effect: "positive", phrase: "beta keeps it safe" }],
        constraints: [],
        complements: ["alpha"],
        sources: [],
      },
    ],
    nodes: [
      { id: "start", kind: "start" },
      { id: "pick", kind: "xor" },
      { id: "alpha", kind: "pattern", pattern: "alpha" },
      { id: "beta", kind: "pattern", pattern: "beta" },
    ],
    edges: [
      { from: "start", to: "pick" },
      { from: "pick", to: "alpha", guard: { maturity: "high" } },
      { from: "pick", to: "beta", guard: "otherwise" },
    ],
    context_facts: { maturity: ["low", "high", "unknown"] },
  };
}

type RecommendImpl = (
  requirements: Requirements,
  call: number,
) => Promise<RecommendationReport>;

export class MockApiClient implements ApiClient {
  model: ModelDocument;
  matrixDoc: MatrixDocument;

  modelCalls = 0;
  matrixCalls = 0;
  recommendCalls: Requirements[] = [];
  whatifCalls: { base: Requirements; variant: Requirements }[] = [];
  /** Requests issued and not yet settled. */
  inFlight = 0;

  modelImpl: () => Promise<ModelDocument>;
  matrixImpl: () => Promise<MatrixDocument>;
  recommendImpl: RecommendImpl;
  whatifImpl: (base: Requirements, variant: Requirements) => Promise<WhatifReport>;

  constructor(model: ModelDocument, matrix?: MatrixDocument) {
    this.model = model;
    this.matrixDoc = matrix ?? { rows: [], columns: [], cells: [] };
    this.modelImpl = () => Promise.resolve(this.model);
    this.matrixImpl = () => Promise.resolve(this.matrixDoc);
    this.recommendImpl = () =>
      Promise.resolve(makeReport([], this.model.metadata.version));
    this.whatifImpl = () =>
      Promise.resolve({ base_digest: "b", variant_digest: "v", entries: [] });
  }

  getModel(): Promise<ModelDocument> {
    this.modelCalls += 1;
    return this.modelImpl();
  }

  getMatrix(): Promise<MatrixDocument> {
    this.matrixCalls += 1;
    return this.matrixImpl();
  }

  recommend(requirements: Requirements): Promise<RecommendationReport> {
    const call = this.recommendCalls.length;
    this.recommendCalls.push(requirements);
    this.inFlight += 1;
    const result = this.recommendImpl(requirements, call);
    return result.finally(() => {
      this.inFlight -= 1;
    });
  }

  whatif(base: Requirements, variant: Requirements): Promise<WhatifReport> {
    this.whatifCalls.push({ base, variant });
    return this.whatifImpl(base, variant);
  }
}

/** Ranked pattern ids as rendered, in DOM order. */
export function renderedRanking(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>(".result-entry")].map(
    (entry) => entry.dataset.pattern ?? "",
  );
}

export function renderedScores(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>(".result-score")].map(
    (score) => score.textContent ?? "",
  );
}

export function setSlider(root: HTMLElement, qa: string, value: number): void {
  const input = root.querySelector<HTMLInputElement>(`input[data-qa="${qa}"]`);
  if (!input) {
    throw new Error(`no slider for ${qa}`);
  }
  input.value = String(value);
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

export function setFact(root: HTMLElement, fact: string, value: string): void {
  const select = root.querySelector<HTMLSelectElement>(`select[data-fact="${fact}"]`);
  if (!select) {
    throw new Error(`no selector for ${fact}`);
  }
  select.value = value;
  select.dispatchEvent(new Event("change", { bubbles: true }));
}
