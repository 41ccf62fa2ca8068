import { HttpApiClient } from "./api.js";
import { DecisionApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const app = new DecisionApp(root, new HttpApiClient(root.dataset.apiBase ?? ""));
  void app.start();
}
