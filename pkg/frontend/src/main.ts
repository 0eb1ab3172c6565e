/** Browser wiring: fetches from the /v1 API and renders into index.html.
 *
 * Single-page, single-user. Concurrent fetches are allowed; each render
 * call simply overwrites its region, so the last response wins.
 */

import { ApiClient, ApiError } from "./api.js";
import { ExplorationSession } from "./session.js";
import {
  renderError,
  renderFootprint,
  renderItemList,
  renderItemView,
  renderPanelMessage,
  renderRecommendationPanel,
} from "./views.js";
import type { ItemSummary } from "./types.js";

const RECOMMENDATION_LIMIT = 5;

function baseUrl(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return (fromQuery ?? "http://127.0.0.1:8000").replace(/\/$/, "");
}

function region(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

const api = new ApiClient(baseUrl());
const session = new ExplorationSession();
let catalog: ItemSummary[] = [];
let currentId: string | null = null;

function renderSidebar(): void {
  region("items").innerHTML = renderItemList(catalog, currentId);
}

function renderSession(): void {
  region("footprint").innerHTML = renderFootprint(session.footprint(), session.trail.length);
  region("trail").textContent = session.trail.join(" → ");
}

async function loadRecommendations(itemId: string): Promise<void> {
  const panels: Array<["similar" | "opposite", string]> = [
    ["similar", "Similar items"],
    ["opposite", "Opposite items"],
  ];
  await Promise.all(
    panels.map(async ([mode, title]) => {
      const target = region(mode);
      try {
        const recommendation = await api[mode](itemId, RECOMMENDATION_LIMIT);
        if (currentId !== itemId) return; // stale response
        target.innerHTML = renderRecommendationPanel(title, recommendation);
      } catch (error) {
        if (currentId !== itemId) return;
        const message = error instanceof ApiError ? error.message : "service unreachable";
        target.innerHTML = renderPanelMessage(title, message);
      }
    }),
  );
}

async function showItem(itemId: string): Promise<void> {
  currentId = itemId;
  try {
    const [item, classification] = await Promise.all([
      api.item(itemId),
      api.classification(itemId),
    ]);
    if (currentId !== itemId) return;
    region("item").innerHTML = renderItemView(item, classification);
    session.visit(itemId, classification.labels);
    renderSidebar();
    renderSession();
    await loadRecommendations(itemId);
  } catch (error) {
    const message = error instanceof ApiError ? error.message : "service unreachable";
    const node = region("item");
    node.innerHTML = renderError(message);
    node.querySelector(".retry")?.addEventListener("click", () => void showItem(itemId));
  }
}

async function start(): Promise<void> {
  document.body.addEventListener("click", (event) => {
    const button = (event.target as HTMLElement).closest<HTMLElement>(".item-link");
    const itemId = button?.dataset.itemId;
    if (itemId) void showItem(itemId);
  });
  try {
    const health = await api.health();
    region("status").textContent = `connected · ${health.items} items · bundle ${health.bundle_sha256.slice(0, 12)}`;
    catalog = await api.listItems();
    renderSidebar();
    renderSession();
  } catch {
    const node = region("item");
    node.innerHTML = renderError(`cannot reach service at ${api.baseUrl}`);
    node.querySelector(".retry")?.addEventListener("click", () => void start());
  }
}

void start();
