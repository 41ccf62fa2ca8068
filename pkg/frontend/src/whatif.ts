import type { ModelDocument, WhatifReport } from "./types.js";
import { formatScore } from "./results.js";

function rankText(rank: number | null): string {
  return rank === null ? "out" : `#${rank}`;
}

function scoreText(score: number | null): string {
  return score === null ? "-" : formatScore(score);
}

/** Render the previous-vs-current diff as one badge row per pattern. */
export function renderWhatif(
  container: HTMLElement,
  diff: WhatifReport,
  model: ModelDocument,
): void {
  container.textContent = "";
  const names = new Map(model.patterns.map((p) => [p.id, p.name]));

  const heading = document.createElement("h3");
  heading.textContent = "Compared with the previous query";
  container.append(heading);

  const list = document.createElement("ul");
  list.className = "whatif-list";
  for (const entry of diff.entries) {
    const item = document.createElement("li");
    item.className = "whatif-entry";
    item.dataset.pattern = entry.pattern;

    const badge = document.createElement("span");
    badge.className = `whatif-badge whatif-${entry.status}`;
    badge.textContent = entry.status;

    const name = document.createElement("span");
    name.className = "whatif-pattern";
    name.textContent = names.get(entry.pattern) ?? entry.pattern;

    const delta = document.createElement("span");
    delta.className = "whatif-delta";
    delta.textContent =
      `${rankText(entry.base_rank)} → ${rankText(entry.variant_rank)}` +
      ` (score ${scoreText(entry.base_score)} → ${scoreText(entry.variant_score)})`;

    item.append(badge, name, delta);
    list.append(item);
  }
  container.append(list);
}
