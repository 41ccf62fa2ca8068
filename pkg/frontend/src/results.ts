import type {
  ModelDocument,
  PatternDocument,
  RecommendationReport,
  ReportEntry,
} from "./types.js";

function patternIndex(model: ModelDocument): Map<string, PatternDocument> {
  return new Map(model.patterns.map((pattern) => [pattern.id, pattern]));
}

function qaNames(model: ModelDocument): Map<string, string> {
  return new Map(model.qas.map((qa) => [qa.id, qa.name]));
}

export function entryElementId(patternId: string): string {
  return `result-${patternId}`;
}

/** Flash and scroll a ranking entry into view; used by every pattern link. */
export function focusEntry(root: ParentNode, patternId: string): void {
  const target = root.querySelector(`#${entryElementId(patternId)}`);
  if (target instanceof HTMLElement) {
    target.scrollIntoView({ behavior: "smooth", block: "center" });
    target.classList.add("flash");
    setTimeout(() => target.classList.remove("flash"), 900);
  }
}

export function formatScore(score: number): string {
  return Number.isInteger(score) ? score.toFixed(1) : String(score);
}

function chipList(
  entry: ReportEntry,
  pattern: PatternDocument | undefined,
  names: Map<string, string>,
): HTMLElement {
  const chips = document.createElement("div");
  chips.className = "chips";
  for (const contribution of entry.contributions) {
    const chip = document.createElement("span");
    chip.className = `chip chip-${contribution.effect}`;
    const sign = contribution.effect === "positive" ? "+" : "-";
    chip.textContent = `${sign} ${names.get(contribution.qa) ?? contribution.qa}`;
    const impact = pattern?.impacts?.find(
      (candidate) => candidate.qa === contribution.qa && candidate.effect === contribution.effect,
    );
    if (impact) {
      chip.title = impact.phrase;
    }
    chips.append(chip);
  }
  return chips;
}

function entryItem(
  entry: ReportEntry,
  rank: number,
  maxScore: number,
  patterns: Map<string, PatternDocument>,
  names: Map<string, string>,
  root: ParentNode,
): HTMLElement {
  const item = document.createElement("li");
  item.className = "result-entry";
  item.id = entryElementId(entry.pattern);
  item.dataset.pattern = entry.pattern;

  const pattern = patterns.get(entry.pattern);

  const header = document.createElement("div");
  header.className = "result-header";
  const title = document.createElement("span");
  title.className = "result-title";
  title.textContent = `${rank}. ${pattern?.name ?? entry.pattern}`;
  const score = document.createElement("span");
  score.className = "result-score";
  score.textContent = formatScore(entry.score);
  header.append(title, score);

  const bar = document.createElement("div");
  bar.className = "score-bar";
  const fill = document.createElement("div");
  fill.className = "score-bar-fill";
  const share = maxScore > 0 ? Math.max(entry.score, 0) / maxScore : 0;
  fill.style.width = `${Math.round(share * 100)}%`;
  bar.append(fill);

  item.append(header, bar, chipList(entry, pattern, names));

  if (pattern?.summary) {
    const summary = document.createElement("p");
    summary.className = "result-summary";
    summary.textContent = pattern.summary;
    item.append(summary);
  }

  for (const warning of entry.warnings) {
    const note = document.createElement("p");
    note.className = "result-warning";
    note.dataset.code = warning.code;
    note.textContent = warning.message;
    item.append(note);
  }

  if (entry.complements.length > 0) {
    const badges = document.createElement("div");
    badges.className = "complements";
    for (const other of entry.complements) {
      const badge = document.createElement("button");
      badge.type = "button";
      badge.className = "complement-badge";
      badge.dataset.target = other;
      badge.textContent = `pairs with ${patterns.get(other)?.name ?? other}`;
      badge.addEventListener("click", () => focusEntry(root, other));
      badges.append(badge);
    }
    item.append(badges);
  }

  return item;
}

/**
 * Render the latest report verbatim: the list order and scores are exactly
 * what the API answered, never recomputed locally.
 */
export function renderResults(
  container: HTMLElement,
  report: RecommendationReport,
  model: ModelDocument,
  options: { noPreference: boolean },
): void {
  container.textContent = "";
  const patterns = patternIndex(model);
  const names = qaNames(model);

  if (options.noPreference) {
    const notice = document.createElement("p");
    notice.className = "notice no-preference";
    notice.textContent =
      "No preference expressed yet: raise a quality slider to rank the patterns.";
    container.append(notice);
  }

  if (report.entries.length === 0) {
    const empty = document.createElement("div");
    empty.className = "empty-state";
    const message = document.createElement("p");
    message.textContent = "No pattern is applicable in this context.";
    empty.append(message);
    container.append(empty);
  } else {
    const list = document.createElement("ol");
    list.className = "results-list";
    const maxScore = Math.max(...report.entries.map((entry) => entry.score));
    report.entries.forEach((entry, index) => {
      list.append(
        entryItem(entry, index + 1, maxScore, patterns, names, container),
      );
    });
    container.append(list);
  }

  for (const warning of report.warnings) {
    const note = document.createElement("p");
    note.className = "report-warning";
    note.dataset.code = warning.code;
    note.textContent = `${warning.code}: ${warning.message}`;
    container.append(note);
  }
}
