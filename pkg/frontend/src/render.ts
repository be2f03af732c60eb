// DOM rendering: category cards with interval bars and experience badges,
// the similarity heatmap, weight bars, the event feed, and the pending banner.

import type { CategoryDoc, EventRecord, InspectResponse, SimilarityEntry } from './types';
import type { UiState } from './state';

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function heatColor(sigma: number, span: number): string {
  const t = Math.max(-1, Math.min(1, span > 0 ? sigma / span : 0));
  if (t >= 0) {
    const g = Math.round(200 * t);
    return `rgb(${235 - g}, 235, ${235 - g})`;
  }
  const r = Math.round(200 * -t);
  return `rgb(235, ${235 - r}, ${235 - r})`;
}

export function renderCategoryCards(root: HTMLElement, categories: CategoryDoc[]): void {
  root.replaceChildren();
  for (const category of categories) {
    const card = el('div', 'category-card');
    card.dataset.categoryId = String(category.id);
    card.append(el('h3', 'category-title', `category ${category.id}`));
    for (const [featureId, vectors] of Object.entries(category.features)) {
      const total = vectors.reduce((acc, v) => acc + v.count, 0);
      const block = el('div', 'feature-block');
      block.append(el('div', 'feature-name', featureId));
      vectors.forEach((vector, index) => {
        const row = el('div', 'interval-row');
        row.title = `vector ${index}, count ${vector.count}`;
        for (const [lo, hi] of vector.intervals) {
          const cell = el('div', 'interval-cell');
          const band = el('div', 'interval-band');
          band.style.left = `${lo * 100}%`;
          band.style.width = `${Math.max(2, (hi - lo) * 100)}%`;
          cell.append(band);
          row.append(cell);
        }
        const probability = total > 0 ? vector.count / total : 0;
        row.append(el('span', 'interval-prob', probability.toFixed(2)));
        block.append(row);
      });
      card.append(block);
    }
    const badges = el('div', 'experience-badges');
    for (const experience of category.experiences) {
      badges.append(
        el('span', `badge badge-${experience.reward}`, `${experience.action}: ${experience.reward}`),
      );
    }
    card.append(badges);
    root.append(card);
  }
}

export function renderHeatmap(root: HTMLElement, similarities: SimilarityEntry[], ids: number[]): void {
  root.replaceChildren();
  if (ids.length === 0) {
    root.append(el('p', 'empty-note', 'no categories yet'));
    return;
  }
  const sigma = new Map<string, number>();
  let span = 0;
  for (const entry of similarities) {
    sigma.set(`${entry.a}:${entry.b}`, entry.sigma);
    span = Math.max(span, Math.abs(entry.sigma));
  }
  const table = el('table', 'heatmap') as HTMLTableElement;
  const header = table.insertRow();
  header.insertCell().textContent = 'σ';
  for (const id of ids) header.insertCell().textContent = String(id);
  for (const a of ids) {
    const row = table.insertRow();
    row.insertCell().textContent = String(a);
    for (const b of ids) {
      const cell = row.insertCell();
      cell.className = 'heat-cell';
      if (a === b) {
        cell.textContent = '—';
        continue;
      }
      const key = a < b ? `${a}:${b}` : `${b}:${a}`;
      const value = sigma.get(key);
      if (value === undefined) continue;
      cell.textContent = value.toFixed(2);
      cell.dataset.pair = key;
      cell.style.backgroundColor = heatColor(value, span);
    }
  }
  root.append(table);
}

export function renderWeights(root: HTMLElement, weights: Record<string, number>): void {
  root.replaceChildren();
  const entries = Object.entries(weights);
  const total = entries.reduce((acc, [, w]) => acc + w, 0) || 1;
  for (const [attribute, weight] of entries) {
    const row = el('div', 'weight-row');
    row.append(el('span', 'weight-name', attribute));
    const bar = el('div', 'weight-bar');
    const fill = el('div', 'weight-fill');
    fill.style.width = `${(weight / total) * 100}%`;
    bar.append(fill);
    row.append(bar);
    row.append(el('span', 'weight-value', weight.toFixed(3)));
    root.append(row);
  }
}

export function renderEventFeed(root: HTMLElement, events: EventRecord[]): void {
  root.replaceChildren();
  for (const event of [...events].reverse().slice(0, 50)) {
    let text = `#${event.step} → category ${event.categoryId}, ${event.action}, ${event.reward}`;
    if (event.merges.length) {
      text += ` | merges: ${event.merges.map((m) => `${m[0]}+${m[1]}→${m[2]}`).join(', ')}`;
    }
    if (event.splits.length) {
      text += ` | splits: ${event.splits.map((s) => `${s[0]}⇒${s[1]}`).join(', ')}`;
    }
    root.append(el('div', `event event-${event.reward}`, text));
  }
}

export function renderPendingBanner(root: HTMLElement, state: UiState): void {
  root.replaceChildren();
  if (state.banner) {
    root.append(el('div', 'banner banner-error', state.banner));
  }
  if (state.pending) {
    const note = state.pending.isNew ? 'new category' : 'known category';
    root.append(
      el(
        'div',
        'banner banner-pending',
        `chose “${state.pending.chosenAction}” for category ${state.pending.categoryId} (${note}) — reward it`,
      ),
    );
  }
}

export function renderAll(
  dom: {
    cards: HTMLElement;
    heatmap: HTMLElement;
    weights: HTMLElement;
    feed: HTMLElement;
    banner: HTMLElement;
    presentControls: HTMLElement;
    rewardButtons: NodeListOf<HTMLButtonElement> | HTMLButtonElement[];
  },
  state: UiState,
): void {
  renderPendingBanner(dom.banner, state);
  const snapshot: InspectResponse | null = state.snapshot;
  if (snapshot) {
    const ids = snapshot.graph.categories.map((c) => c.id);
    renderCategoryCards(dom.cards, snapshot.graph.categories);
    renderHeatmap(dom.heatmap, snapshot.similarities, ids);
    renderWeights(dom.weights, snapshot.weights);
    renderEventFeed(dom.feed, snapshot.events);
  }
  const rewardEnabled = state.pending !== null;
  for (const button of Array.from(dom.rewardButtons)) {
    button.disabled = !rewardEnabled;
  }
  dom.presentControls
    .querySelectorAll('button, select')
    .forEach((node) => ((node as HTMLButtonElement).disabled = rewardEnabled));
}
