import type { MatrixDocument, ModelDocument } from "./types.js";

/**
 * Trade-off heatmap: patterns down, quality attributes across, each cell
 * colored by effect with conditional effects hatched and titled with their
 * guard condition.
 */
export function renderMatrix(
  container: HTMLElement,
  matrix: MatrixDocument,
  model: ModelDocument,
  onPatternClick: (patternId: string) => void,
): void {
  container.textContent = "";

  if (matrix.rows.length === 0 || matrix.columns.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "The model defines no impacts to chart.";
    container.append(empty);
    return;
  }

  const patternNames = new Map(model.patterns.map((p) => [p.id, p.name]));
  const qaNames = new Map(model.qas.map((qa) => [qa.id, qa.name]));

  const scroller = document.createElement("div");
  scroller.className = "matrix-scroller";
  const table = document.createElement("table");
  table.className = "matrix";

  const head = document.createElement("thead");
  const headRow = document.createElement("tr");
  headRow.append(document.createElement("th"));
  for (const qa of matrix.columns) {
    const th = document.createElement("th");
    th.scope = "col";
    th.className = "matrix-qa";
    th.textContent = qaNames.get(qa) ?? qa;
    headRow.append(th);
  }
  head.append(headRow);
  table.append(head);

  const body = document.createElement("tbody");
  matrix.rows.forEach((patternId, rowIndex) => {
    const tr = document.createElement("tr");
    const th = document.createElement("th");
    th.scope = "row";
    const link = document.createElement("button");
    link.type = "button";
    link.className = "pattern-link";
    link.dataset.pattern = patternId;
    link.textContent = patternNames.get(patternId) ?? patternId;
    link.addEventListener("click", () => onPatternClick(patternId));
    th.append(link);
    tr.append(th);

    matrix.cells[rowIndex].forEach((cell, columnIndex) => {
      const td = document.createElement("td");
      if (cell === null) {
        td.className = "cell cell-none";
      } else {
        td.className = `cell cell-${cell.effect}`;
        let mark = cell.effect === "positive" ? "+" : "-";
        if (cell.condition) {
          td.classList.add("cell-conditional");
          td.title = `when ${cell.condition}`;
          mark += "?";
        }
        td.textContent = mark;
      }
      td.dataset.qa = matrix.columns[columnIndex];
      tr.append(td);
    });
    body.append(tr);
  });
  table.append(body);
  scroller.append(table);
  container.append(scroller);
}
