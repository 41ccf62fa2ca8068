import type { ApiClient } from "./api.js";
import type {
  MatrixDocument,
  ModelDocument,
  RecommendationReport,
  Requirements,
} from "./types.js";
import { debounce, type Debounced } from "./debounce.js";
import { renderControls } from "./controls.js";
import { focusEntry, renderResults } from "./results.js";
import { renderWhatif } from "./whatif.js";
import { renderMatrix } from "./matrixview.js";
import { renderGraph } from "./graphview.js";
import {
  allWeightsZero,
  buildRequirements,
  initialState,
  sameRequirements,
  type SessionState,
  type ViewMode,
} from "./state.js";

export interface AppOptions {
  /** Quiet period before a control change becomes a query. */
  debounceMs?: number;
}

const VIEWS: ViewMode[] = ["wizard", "matrix", "graph"];

export class DecisionApp {
  private readonly root: HTMLElement;
  private readonly api: ApiClient;
  private readonly recommendDebounce: Debounced;

  private model: ModelDocument | null = null;
  private matrix: MatrixDocument | null = null;
  private state: SessionState | null = null;

  /** Monotonic request number; only the newest issued query may render. */
  private sequence = 0;
  private whatifOpen = false;

  constructor(root: HTMLElement, api: ApiClient, options: AppOptions = {}) {
    this.root = root;
    this.api = api;
    this.recommendDebounce = debounce(
      () => this.issueRecommend(),
      options.debounceMs ?? 150,
    );
  }

  /** Fetch the model and build the whole page; safe to call again to retry. */
  async start(): Promise<void> {
    this.root.textContent = "";
    let model: ModelDocument;
    try {
      model = await this.api.getModel();
    } catch (error) {
      this.renderFetchFailure(error);
      return;
    }
    this.model = model;
    this.state = initialState(model);
    this.renderSkeleton(model);
    this.recommendDebounce.schedule();
  }

  private renderFetchFailure(error: unknown): void {
    const banner = document.createElement("div");
    banner.className = "error-banner";
    const message = document.createElement("p");
    message.textContent = `Could not load the decision model: ${
      error instanceof Error ? error.message : String(error)
    }`;
    const retry = document.createElement("button");
    retry.type = "button";
    retry.className = "retry";
    retry.textContent = "Retry";
    retry.addEventListener("click", () => {
      void this.start();
    });
    banner.append(message, retry);
    this.root.append(banner);
  }

  private renderSkeleton(model: ModelDocument): void {
    const header = document.createElement("header");
    const title = document.createElement("h1");
    title.textContent = model.metadata.title;
    const version = document.createElement("span");
    version.className = "model-version";
    version.textContent = `v${model.metadata.version}`;
    header.append(title, version);

    const tabs = document.createElement("nav");
    tabs.className = "tabs";
    for (const view of VIEWS) {
      const tab = document.createElement("button");
      tab.type = "button";
      tab.className = "tab";
      tab.dataset.view = view;
      tab.textContent = view;
      tab.addEventListener("click", () => this.switchView(view));
      tabs.append(tab);
    }

    const controls = document.createElement("aside");
    controls.className = "controls-pane";
    controls.append(
      renderControls(model, {
        onWeightChange: (qa, value) => this.onWeightChange(qa, value),
        onFactChange: (fact, value) => this.onFactChange(fact, value),
      }),
    );

    const main = document.createElement("main");

    const wizard = document.createElement("section");
    wizard.className = "view view-wizard";

    const whatifBar = document.createElement("div");
    whatifBar.className = "whatif-bar";
    const toggle = document.createElement("button");
    toggle.type = "button";
    toggle.className = "whatif-toggle";
    toggle.textContent = "Compare with previous";
    toggle.disabled = true;
    toggle.addEventListener("click", () => {
      void this.toggleWhatif();
    });
    whatifBar.append(toggle);

    const results = document.createElement("div");
    results.className = "results-pane";
    results.textContent = "Loading recommendations...";

    const whatifPanel = document.createElement("div");
    whatifPanel.className = "whatif-pane";
    whatifPanel.hidden = true;

    wizard.append(whatifBar, results, whatifPanel);

    const matrixView = document.createElement("section");
    matrixView.className = "view view-matrix";
    matrixView.hidden = true;

    const graphView = document.createElement("section");
    graphView.className = "view view-graph";
    graphView.hidden = true;

    main.append(wizard, matrixView, graphView);
    this.root.append(header, tabs, controls, main);
    this.markActiveTab("wizard");
  }

  private query<T extends Element>(selector: string): T {
    const found = this.root.querySelector<T>(selector);
    if (!found) {
      throw new Error(`missing element ${selector}`);
    }
    return found;
  }

  private onWeightChange(qa: string, value: number): void {
    if (!this.state) {
      return;
    }
    this.state.weights[qa] = value;
    this.recommendDebounce.schedule();
  }

  private onFactChange(fact: string, value: string): void {
    if (!this.state) {
      return;
    }
    this.state.facts[fact] = value;
    this.recommendDebounce.schedule();
  }

  private issueRecommend(): void {
    if (!this.state) {
      return;
    }
    const requirements = buildRequirements(this.state);
    const seq = ++this.sequence;
    this.api.recommend(requirements).then(
      (report) => {
        if (seq !== this.sequence) {
          return;
        }
        this.commitReport(requirements, report);
      },
      (error) => {
        if (seq !== this.sequence) {
          return;
        }
        this.renderQueryError(error);
      },
    );
  }

  private commitReport(requirements: Requirements, report: RecommendationReport): void {
    if (!this.state || !this.model) {
      return;
    }
    if (
      this.state.committed &&
      !sameRequirements(this.state.committed, requirements)
    ) {
      this.state.previous = this.state.committed;
    }
    this.state.committed = requirements;
    this.state.lastReport = report;

    renderResults(this.query(".results-pane"), report, this.model, {
      noPreference: allWeightsZero(this.state),
    });

    const toggle = this.query<HTMLButtonElement>(".whatif-toggle");
    toggle.disabled = this.state.previous === null;
    if (this.whatifOpen) {
      void this.refreshWhatif();
    }
  }

  private renderQueryError(error: unknown): void {
    const pane = this.query<HTMLElement>(".results-pane");
    pane.textContent = "";
    const banner = document.createElement("p");
    banner.className = "error-banner";
    banner.textContent = `Recommendation failed: ${
      error instanceof Error ? error.message : String(error)
    }`;
    pane.append(banner);
  }

  private async toggleWhatif(): Promise<void> {
    const panel = this.query<HTMLElement>(".whatif-pane");
    if (this.whatifOpen) {
      this.whatifOpen = false;
      panel.hidden = true;
      panel.textContent = "";
      return;
    }
    this.whatifOpen = true;
    panel.hidden = false;
    await this.refreshWhatif();
  }

  private async refreshWhatif(): Promise<void> {
    if (!this.state || !this.model || !this.state.previous || !this.state.committed) {
      return;
    }
    const panel = this.query<HTMLElement>(".whatif-pane");
    try {
      const diff = await this.api.whatif(this.state.previous, this.state.committed);
      if (this.whatifOpen) {
        renderWhatif(panel, diff, this.model);
      }
    } catch (error) {
      panel.textContent = `What-if comparison failed: ${
        error instanceof Error ? error.message : String(error)
      }`;
    }
  }

  private markActiveTab(view: ViewMode): void {
    for (const tab of this.root.querySelectorAll<HTMLButtonElement>(".tab")) {
      tab.classList.toggle("active", tab.dataset.view === view);
    }
  }

  private switchView(view: ViewMode): void {
    if (!this.state || !this.model) {
      return;
    }
    this.state.view = view;
    this.markActiveTab(view);
    this.query<HTMLElement>(".view-wizard").hidden = view !== "wizard";
    this.query<HTMLElement>(".view-matrix").hidden = view !== "matrix";
    this.query<HTMLElement>(".view-graph").hidden = view !== "graph";

    if (view === "matrix") {
      void this.ensureMatrix();
    } else if (view === "graph") {
      this.ensureGraph();
    }
  }

  private jumpToPattern(patternId: string): void {
    this.switchView("wizard");
    focusEntry(this.root, patternId);
  }

  private async ensureMatrix(): Promise<void> {
    if (!this.model) {
      return;
    }
    const container = this.query<HTMLElement>(".view-matrix");
    if (this.matrix) {
      if (container.childElementCount === 0) {
        renderMatrix(container, this.matrix, this.model, (id) => this.jumpToPattern(id));
      }
      return;
    }
    try {
      this.matrix = await this.api.getMatrix();
    } catch (error) {
      container.textContent = `Could not load the trade-off matrix: ${
        error instanceof Error ? error.message : String(error)
      }`;
      return;
    }
    renderMatrix(container, this.matrix, this.model, (id) => this.jumpToPattern(id));
  }

  private ensureGraph(): void {
    if (!this.model) {
      return;
    }
    const container = this.query<HTMLElement>(".view-graph");
    if (container.childElementCount === 0) {
      renderGraph(container, this.model, (id) => this.jumpToPattern(id));
    }
  }
}

