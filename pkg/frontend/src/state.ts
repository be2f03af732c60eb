// UI state is a pure function of the last server responses: the client never
// recomputes similarities or weights on its own.

import type { InspectResponse, PresentResponse, RewardResponse } from './types';

export interface PendingInteraction {
  categoryId: number;
  chosenAction: string;
  isNew: boolean;
}

export interface UiState {
  sessionId: string | null;
  pending: PendingInteraction | null;
  snapshot: InspectResponse | null;
  banner: string | null;
  lastOutcome: RewardResponse | null;
}

export function initialState(): UiState {
  return { sessionId: null, pending: null, snapshot: null, banner: null, lastOutcome: null };
}

export function canPresent(state: UiState): boolean {
  return state.sessionId !== null && state.pending === null;
}

export function canReward(state: UiState): boolean {
  return state.sessionId !== null && state.pending !== null;
}

export function withSession(state: UiState, sessionId: string): UiState {
  return { ...initialState(), sessionId };
}

export function afterPresent(state: UiState, response: PresentResponse): UiState {
  return {
    ...state,
    pending: {
      categoryId: response.categoryId,
      chosenAction: response.chosenAction,
      isNew: response.isNew,
    },
    banner: null,
  };
}

export function afterReward(state: UiState, response: RewardResponse): UiState {
  return { ...state, pending: null, lastOutcome: response, banner: null };
}

export function afterInspect(state: UiState, snapshot: InspectResponse): UiState {
  return { ...state, snapshot };
}

export function withBanner(state: UiState, banner: string): UiState {
  return { ...state, banner };
}

/** Client-side normalization for the slider preview only; the service
 * performs the authoritative normalization on present. */
export function normalizePreview(raw: number[]): number[] | null {
  const clamped = raw.map((v) => (v > 0 ? v : 0));
  const total = clamped.reduce((acc, v) => acc + v, 0);
  if (total <= 0) return null;
  return clamped.map((v) => v / total);
}

/** Percept payloads for the built-in sorting-scenario object kinds. */
export const OBJECT_KINDS: Record<string, Record<string, number[]>> = {
  greenApple: { color: [0, 1, 0, 0], form: [0, 1] },
  redApple: { color: [1, 0, 0, 0], form: [0, 1] },
  brownApple: { color: [0, 0, 0, 1], form: [0, 1] },
  greenBlock: { color: [0, 1, 0, 0], form: [1, 0] },
  redBlock: { color: [1, 0, 0, 0], form: [1, 0] },
  yellowBlock: { color: [0, 0, 1, 0], form: [1, 0] },
};

export const DEFAULT_SESSION = {
  featureSchema: [
    { id: 'color', characteristics: ['red', 'green', 'yellow', 'brown'] },
    { id: 'form', characteristics: ['rectangular', 'circular'] },
  ],
  actionSet: ['fruitBasket', 'rubbishBin', 'toyBox'],
  parameters: { rhoRa: 0, deltaAw: 4 / 9, thetaMc: 6 / 7, thetaMf: 0.3 },
  seed: 0,
};
