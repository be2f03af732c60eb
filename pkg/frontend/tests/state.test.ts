import { describe, expect, it } from 'vitest';

import {
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
} from '../src/state';
import type { InspectResponse, PresentResponse, RewardResponse } from '../src/types';

const PRESENT: PresentResponse = {
  categoryId: 1,
  isNew: true,
  chosenAction: 'fruitBasket',
  similaritiesSnapshot: [],
};

const REWARD: RewardResponse = {
  outcome: 'updated',
  merges: [],
  splits: [],
  weightsAfter: { color: 1, form: 1, experience: 1 },
};

describe('interaction gating', () => {
  it('cannot present or reward without a session', () => {
    const state = initialState();
    expect(canPresent(state)).toBe(false);
    expect(canReward(state)).toBe(false);
  });

  it('present is enabled and reward disabled in a fresh session', () => {
    const state = withSession(initialState(), 'abc');
    expect(canPresent(state)).toBe(true);
    expect(canReward(state)).toBe(false);
  });

  it('after present only reward is enabled', () => {
    const state = afterPresent(withSession(initialState(), 'abc'), PRESENT);
    expect(canPresent(state)).toBe(false);
    expect(canReward(state)).toBe(true);
    expect(state.pending?.chosenAction).toBe('fruitBasket');
  });

  it('reward clears the pending interaction', () => {
    let state = afterPresent(withSession(initialState(), 'abc'), PRESENT);
    state = afterReward(state, REWARD);
    expect(state.pending).toBeNull();
    expect(canPresent(state)).toBe(true);
    expect(canReward(state)).toBe(false);
    expect(state.lastOutcome?.outcome).toBe('updated');
  });

  it('starting a new session resets pending state', () => {
    let state = afterPresent(withSession(initialState(), 'abc'), PRESENT);
    state = withSession(state, 'def');
    expect(state.pending).toBeNull();
    expect(state.sessionId).toBe('def');
  });

  it('banners do not change gating', () => {
    const state = withBanner(withSession(initialState(), 'abc'), 'oops');
    expect(state.banner).toBe('oops');
    expect(canPresent(state)).toBe(true);
  });

  it('inspect snapshots are stored verbatim', () => {
    const snapshot = { graph: { categories: [] }, events: [] } as unknown as InspectResponse;
    const state = afterInspect(withSession(initialState(), 'abc'), snapshot);
    expect(state.snapshot).toBe(snapshot);
  });
});

describe('slider preview normalization', () => {
  it('normalizes to percentages', () => {
    expect(normalizePreview([2, 1, 1, 0])).toEqual([0.5, 0.25, 0.25, 0]);
  });

  it('clamps negatives before scaling', () => {
    expect(normalizePreview([-5, 1, 1, 0])).toEqual([0, 0.5, 0.5, 0]);
  });

  it('returns null for all-zero input so present stays disabled', () => {
    expect(normalizePreview([0, 0, 0])).toBeNull();
  });

  it('manual slider vector matches its payload', () => {
    expect(normalizePreview([0.8, 0, 0.05, 0.15])).toEqual([0.8, 0, 0.05, 0.15]);
  });
});

describe('object kind presets', () => {
  it('cover the six scenario kinds with unit payloads', () => {
    expect(Object.keys(OBJECT_KINDS)).toHaveLength(6);
    for (const payload of Object.values(OBJECT_KINDS)) {
      expect(payload.color!).toHaveLength(4);
      expect(payload.form!).toHaveLength(2);
      expect(payload.color!.reduce((a, b) => a + b, 0)).toBe(1);
      expect(payload.form!.reduce((a, b) => a + b, 0)).toBe(1);
    }
  });
});
