import { ServiceError, TeachingClient } from './api';
import {
  DEFAULT_SESSION,
  OBJECT_KINDS,
  afterInspect,
  afterPresent,
  afterReward,
  canPresent,
  canReward,
  initialState,
  normalizePreview,
  withBanner,
  withSession,
} from './state';
import { renderAll } from './render';
import type { Reward } from './types';
import type { UiState } from './state';

const client = new TeachingClient('');
let state: UiState = initialState();

function dom() {
  return {
    cards: document.getElementById('category-cards')!,
    heatmap: document.getElementById('heatmap')!,
    weights: document.getElementById('weights')!,
    feed: document.getElementById('event-feed')!,
    banner: document.getElementById('banner')!,
    presentControls: document.getElementById('present-controls')!,
    rewardButtons: document.querySelectorAll<HTMLButtonElement>('.reward-button'),
  };
}

function redraw() {
  renderAll(dom(), state);
  updateSliderPreview();
}

async function refreshSnapshot() {
  if (!state.sessionId) return;
  state = afterInspect(state, await client.inspect(state.sessionId));
  redraw();
}

async function startSession() {
  state = withSession(state, await client.createSession(DEFAULT_SESSION));
  await refreshSnapshot();
}

function sliderValues(): { color: number[]; form: number[] } {
  const color = ['red', 'green', 'yellow', 'brown'].map((name) =>
    Number((document.getElementById(`slider-${name}`) as HTMLInputElement).value),
  );
  const form = ['rectangular', 'circular'].map((name) =>
    Number((document.getElementById(`slider-${name}`) as HTMLInputElement).value),
  );
  return { color, form };
}

function updateSliderPreview() {
  const { color, form } = sliderValues();
  const preview = document.getElementById('slider-preview')!;
  const presentButton = document.getElementById('present-sliders') as HTMLButtonElement;
  const normalizedColor = normalizePreview(color);
  const normalizedForm = normalizePreview(form);
  if (!normalizedColor || !normalizedForm) {
    preview.textContent = 'all-zero percept: nothing to present';
    presentButton.disabled = true;
    return;
  }
  if (!canReward(state)) presentButton.disabled = !canPresent(state);
  preview.textContent =
    `color [${normalizedColor.map((v) => v.toFixed(2)).join(', ')}] · ` +
    `form [${normalizedForm.map((v) => v.toFixed(2)).join(', ')}]`;
}

async function present(features: Record<string, number[]>) {
  if (!state.sessionId || !canPresent(state)) return;
  try {
    state = afterPresent(state, await client.present(state.sessionId, features));
  } catch (error) {
    if (error instanceof ServiceError && error.code === 'pending_interaction') {
      state = withBanner(state, 'reward the pending object before presenting another');
    } else {
      state = withBanner(state, error instanceof Error ? error.message : String(error));
    }
  }
  await refreshSnapshot();
}

async function reward(value: Reward) {
  if (!state.sessionId || !canReward(state)) return;
  try {
    state = afterReward(state, await client.reward(state.sessionId, value));
  } catch (error) {
    state = withBanner(state, error instanceof Error ? error.message : String(error));
  }
  await refreshSnapshot();
}

function wire() {
  const kindSelect = document.getElementById('kind-select') as HTMLSelectElement;
  for (const kind of Object.keys(OBJECT_KINDS)) {
    const option = document.createElement('option');
    option.value = kind;
    option.textContent = kind;
    kindSelect.append(option);
  }
  document.getElementById('present-kind')!.addEventListener('click', () => {
    const payload = OBJECT_KINDS[kindSelect.value];
    if (payload) void present(payload);
  });
  document.getElementById('present-sliders')!.addEventListener('click', () => {
    void present(sliderValues());
  });
  document.querySelectorAll<HTMLInputElement>('.percept-slider').forEach((slider) => {
    slider.addEventListener('input', updateSliderPreview);
  });
  document.querySelectorAll<HTMLButtonElement>('.reward-button').forEach((button) => {
    button.addEventListener('click', () => void reward(button.dataset.reward as Reward));
  });
  document.getElementById('new-session')!.addEventListener('click', () => void startSession());
}

wire();
void startSession();
redraw();
