import type { ModelDocument, Polarity } from "./types.js";
import { neutralFactValue } from "./state.js";

export interface ControlHandlers {
  onWeightChange(qa: string, value: number): void;
  onFactChange(fact: string, value: string): void;
}

const GROUP_TITLES: Record<Polarity, string> = {
  benefit: "Qualities to pursue",
  cost: "Costs to watch",
};

export function factLabel(fact: string): string {
  return fact.replace(/_/g, " ");
}

function sliderRow(
  qaId: string,
  qaName: string,
  handlers: ControlHandlers,
): HTMLElement {
  const row = document.createElement("label");
  row.className = "slider-row";

  const name = document.createElement("span");
  name.className = "slider-name";
  name.textContent = qaName;

  const input = document.createElement("input");
  input.type = "range";
  input.min = "0";
  input.max = "5";
  input.step = "0.5";
  input.value = "0";
  input.dataset.qa = qaId;

  const readout = document.createElement("output");
  readout.className = "slider-value";
  readout.textContent = "0";

  input.addEventListener("input", () => {
    const value = Number(input.value);
    readout.textContent = String(value);
    handlers.onWeightChange(qaId, value);
  });

  row.append(name, input, readout);
  return row;
}

function factRow(
  fact: string,
  domain: string[],
  handlers: ControlHandlers,
): HTMLElement {
  const row = document.createElement("label");
  row.className = "fact-row";

  const name = document.createElement("span");
  name.className = "fact-name";
  name.textContent = factLabel(fact);

  const select = document.createElement("select");
  select.dataset.fact = fact;
  for (const value of domain) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = value.replace(/_/g, " ");
    select.append(option);
  }
  select.value = neutralFactValue(domain);

  select.addEventListener("change", () => {
    handlers.onFactChange(fact, select.value);
  });

  row.append(name, select);
  return row;
}

/**
 * Build the control panel straight from the served model document:
 * one 0 to 5 slider per quality attribute, grouped by polarity, and one
 * selector per context fact offering exactly the served domain.
 */
export function renderControls(
  model: ModelDocument,
  handlers: ControlHandlers,
): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "controls";

  for (const polarity of ["benefit", "cost"] as Polarity[]) {
    const group = model.qas.filter((qa) => qa.polarity === polarity);
    if (group.length === 0) {
      continue;
    }
    const fieldset = document.createElement("fieldset");
    fieldset.className = `qa-group qa-group-${polarity}`;
    const legend = document.createElement("legend");
    legend.textContent = GROUP_TITLES[polarity];
    fieldset.append(legend);
    for (const qa of group) {
      fieldset.append(sliderRow(qa.id, qa.name, handlers));
    }
    panel.append(fieldset);
  }

  const facts = document.createElement("fieldset");
  facts.className = "fact-group";
  const legend = document.createElement("legend");
  legend.textContent = "Project context";
  facts.append(legend);
  for (const [fact, domain] of Object.entries(model.context_facts)) {
    facts.append(factRow(fact, domain, handlers));
  }
  panel.append(facts);

  return panel;
}
