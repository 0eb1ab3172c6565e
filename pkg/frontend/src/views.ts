/** Pure HTML renderers: state in, markup string out.
 *
 * Keeping these free of DOM and fetch calls lets them run under plain
 * node tests; main.ts owns all browser wiring.
 */

import { highlightSegments, triggerTerms } from "./highlight.js";
import { FOUNDATIONS, POLARITIES } from "./footprint.js";
import type {
  ClassificationRecord,
  Item,
  ItemSummary,
  RecommendationRecord,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderItemList(items: ItemSummary[], currentId: string | null): string {
  const rows = items.map((item) => {
    const current = item.id === currentId ? " current" : "";
    const tag = item.labels.length ? ` <em>${escapeHtml(item.labels.join(", "))}</em>` : "";
    return `<li><button class="item-link${current}" data-item-id="${escapeHtml(item.id)}">${escapeHtml(item.title)}</button>${tag}</li>`;
  });
  return `<ul class="item-list">${rows.join("")}</ul>`;
}

export function renderItemView(item: Item, classification: ClassificationRecord): string {
  const badges = classification.explanations
    .map(
      (e) =>
        `<span class="badge" data-label="${escapeHtml(e.label)}">${escapeHtml(e.label)} <small>${Math.round(e.coverage * 100)}%</small></span>`,
    )
    .join(" ");
  const banner = classification.labels.length
    ? `<div class="badges">${badges}</div>`
    : `<div class="banner">no value-emotion match</div>`;

  const triggers = triggerTerms(classification.explanations);
  const description = highlightSegments(item.description, triggers)
    .map((s) => (s.highlighted ? `<mark>${escapeHtml(s.text)}</mark>` : escapeHtml(s.text)))
    .join("");

  return [
    `<h2>${escapeHtml(item.title)}</h2>`,
    banner,
    `<p class="description">${description}</p>`,
  ].join("\n");
}

export function renderRecommendationPanel(
  title: string,
  recommendation: RecommendationRecord,
): string {
  if (recommendation.ranked.length === 0) {
    return `<h3>${escapeHtml(title)}</h3><p class="empty">nothing to recommend yet</p>`;
  }
  const rows = recommendation.ranked.map(
    (r) =>
      `<li><button class="item-link" data-item-id="${escapeHtml(r.item_id)}">${escapeHtml(r.item_id)}</button> <small>${r.score.toFixed(2)} · ${escapeHtml(r.labels.join(", "))}</small></li>`,
  );
  return `<h3>${escapeHtml(title)}</h3><ol>${rows.join("")}</ol>`;
}

export function renderPanelMessage(title: string, message: string): string {
  return `<h3>${escapeHtml(title)}</h3><p class="empty">${escapeHtml(message)}</p>`;
}

export function renderFootprint(footprint: Map<string, number>, trailLength: number): string {
  if (trailLength === 0) {
    return `<p class="empty">visit an item to start your value footprint</p>`;
  }
  const header = `<tr><th></th>${POLARITIES.map((p) => `<th>${p}</th>`).join("")}</tr>`;
  const rows = FOUNDATIONS.map((foundation) => {
    const cells = POLARITIES.map((polarity) => {
      const count = footprint.get(`${foundation}:${polarity}`) ?? 0;
      return `<td class="${count ? "visited" : "unvisited"}">${count || ""}</td>`;
    });
    return `<tr><th>${foundation}</th>${cells.join("")}</tr>`;
  });
  return `<table class="footprint">${header}${rows.join("")}</table>`;
}

export function renderError(message: string): string {
  return `<div class="error">${escapeHtml(message)} <button class="retry">retry</button></div>`;
}
