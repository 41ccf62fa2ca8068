import type { ModelDocument, RecommendationReport, Requirements } from "./types.js";

export type ViewMode = "wizard" | "matrix" | "graph";

/**
 * Everything the wizard tracks between interactions. Weights hold every
 * slider value including zeros; buildRequirements trims the zeros so the
 * query only carries expressed preferences.
 */
export interface SessionState {
  weights: Record<string, number>;
  facts: Record<string, string>;
  /** Query behind the last rendered report, for what-if comparison. */
  previous: Requirements | null;
  /** Query whose report is currently rendered. */
  committed: Requirements | null;
  lastReport: RecommendationReport | null;
  view: ViewMode;
}

/**
 * Neutral value for a fact: `unknown` when the served domain offers it,
 * otherwise the first domain value. This reproduces the engine defaults
 * without hardcoding fact names, so it holds for any served model.
 */
export function neutralFactValue(domain: string[]): string {
  return domain.includes("unknown") ? "unknown" : domain[0];
}

export function initialState(model: ModelDocument): SessionState {
  const weights: Record<string, number> = {};
  for (const qa of model.qas) {
    weights[qa.id] = 0;
  }
  const facts: Record<string, string> = {};
  for (const [fact, domain] of Object.entries(model.context_facts)) {
    facts[fact] = neutralFactValue(domain);
  }
  return {
    weights,
    facts,
    previous: null,
    committed: null,
    lastReport: null,
    view: "wizard",
  };
}

/** Snapshot the controls as a query body: nonzero weights, all facts. */
export function buildRequirements(state: SessionState): Requirements {
  const weights: Record<string, number> = {};
  for (const [qa, value] of Object.entries(state.weights)) {
    if (value > 0) {
      weights[qa] = value;
    }
  }
  return { weights, context: { ...state.facts } };
}

export function allWeightsZero(state: SessionState): boolean {
  return Object.values(state.weights).every((value) => value === 0);
}

export function sameRequirements(a: Requirements, b: Requirements): boolean {
  return JSON.stringify(a) === JSON.stringify(b);
}
