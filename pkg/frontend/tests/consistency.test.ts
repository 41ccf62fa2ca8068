import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { DecisionApp } from "../src/app.js";
import { formatScore } from "../src/results.js";
import modelFixture from "./fixtures/model.json" with { type: "json" };
import interactionsFixture from "./fixtures/interactions.json" with { type: "json" };
import type {
  ModelDocument,
  RecommendationReport,
  Requirements,
} from "../src/types.js";
import {
  MockApiClient,
  renderedRanking,
  renderedScores,
  setFact,
  setSlider,
  settle,
} from "./helpers.js";

interface ScriptedStep {
  action: { kind: "weight" | "fact"; key: string; value: number | string };
  request: Requirements;
  response: RecommendationReport;
}

interface InteractionScript {
  initial: { request: Requirements; response: RecommendationReport };
  steps: ScriptedStep[];
}

const model = modelFixture as unknown as ModelDocument;
const script = interactionsFixture as unknown as InteractionScript;

beforeEach(() => {
  vi.useFakeTimers();
  document.body.innerHTML = '<div id="app"></div>';
});

afterEach(() => {
  vi.useRealTimers();
});

function scriptedResponse(call: number): {
  request: Requirements;
  response: RecommendationReport;
} {
  return call === 0 ? script.initial : script.steps[call - 1];
}

function assertRenderedEquals(root: HTMLElement, response: RecommendationReport): void {
  expect(renderedRanking(root)).toEqual(response.entries.map((entry) => entry.pattern));
  expect(renderedScores(root)).toEqual(
    response.entries.map((entry) => formatScore(entry.score)),
  );
  if (response.entries.length === 0) {
    expect(root.querySelector(".empty-state")).not.toBeNull();
  }
  const renderedWarningCodes = [
    ...root.querySelectorAll<HTMLElement>(".report-warning"),
  ].map((warning) => warning.dataset.code);
  expect(renderedWarningCodes).toEqual(response.warnings.map((warning) => warning.code));
}

describe("UI consistency against a scripted API", () => {
  it("renders the mock response verbatim across 20 scripted interactions", async () => {
    expect(script.steps.length).toBe(20);

    const api = new MockApiClient(model);
    api.recommendImpl = (requirements, call) => {
      const scripted = scriptedResponse(call);
      expect(requirements).toEqual(scripted.request);
      return Promise.resolve(scripted.response);
    };

    const root = document.getElementById("app") as HTMLElement;
    const app = new DecisionApp(root, api);
    await app.start();
    await vi.advanceTimersByTimeAsync(150);
    await settle();

    expect(api.recommendCalls.length).toBe(1);
    assertRenderedEquals(root, script.initial.response);

    for (const [index, step] of script.steps.entries()) {
      if (step.action.kind === "weight") {
        setSlider(root, step.action.key, step.action.value as number);
      } else {
        setFact(root, step.action.key, step.action.value as string);
      }
      await vi.advanceTimersByTimeAsync(150);
      await settle();

      expect(api.recommendCalls.length).toBe(index + 2);
      assertRenderedEquals(root, step.response);
    }
  });

  it("renders the scripted empty state with its no-candidates warning", async () => {
    const emptyStep = script.steps.find((step) => step.response.entries.length === 0);
    expect(emptyStep).toBeDefined();
    const codes = emptyStep!.response.warnings.map((warning) => warning.code);
    expect(codes).toContain("W_NO_CANDIDATES");
  });

  it("issues requests whose shape matches the scripted queries exactly", () => {
    for (const step of script.steps) {
      for (const value of Object.values(step.request.weights)) {
        expect(value).toBeGreaterThan(0);
      }
      expect(Object.keys(step.request.context).sort()).toEqual(
        Object.keys(model.context_facts).sort(),
      );
    }
  });
});
