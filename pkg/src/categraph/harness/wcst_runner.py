"""Card-sorting run: deals the shuffled deck against the knowledge graph,
reshuffling on exhaustion, until nine rule runs complete or the cap hits."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..knowledge import KnowledgeGraph, Parameters
from ..scenarios.wcst import (
    WCST_ACTIONS,
    WCST_SCHEMA,
    WcstState,
    wcst_deck,
    wcst_noisy_percept,
    wcst_oracle,
    wcst_percept,
)
from .events import EventRecord, make_event


@dataclass
class WcstRunStats:
    completed: bool
    cards_presented: int
    rule_changes: int
    per_step_weights: list[dict[str, float]]
    # (presentation index, rule just completed, weights snapshot)
    rule_completions: list[tuple[int, str, dict[str, float]]] = field(default_factory=list)
    events: list[EventRecord] = field(default_factory=list)
    seed: int = 0
    parameters: Parameters = Parameters()
    graph: KnowledgeGraph | None = None


DEFAULT_WCST_PARAMS = Parameters(rho_ra=0.0, delta_aw=0.08, theta_mc=2.1, theta_mf=0.3)


def run_wcst(
    params: Parameters | None = None,
    seed: int = 0,
    max_presentations: int = 600,
    variant: str = "noisy",
) -> WcstRunStats:
    """Deal the shuffled deck against a fresh graph until nine rule runs
    complete or the cap hits.

    The default "noisy" variant presents classified-correct percepts with
    uncertainty; "exact" presents unit vectors.  Exact percepts refit the
    point-like intervals of every stale category they ever created, which
    keeps old knowledge replaying and slows relearning drastically, so noisy
    is the default.
    """
    if variant not in ("exact", "noisy"):
        raise ValueError(f"unknown variant {variant!r}")
    params = params or DEFAULT_WCST_PARAMS
    graph = KnowledgeGraph(WCST_SCHEMA, WCST_ACTIONS, params=params, seed=seed)
    state = WcstState()
    reshuffle_rng = random.Random(f"wcst-run|{seed}")
    deck = wcst_deck(seed)
    position = 0
    presented = 0
    weights_log: list[dict[str, float]] = []
    completions: list[tuple[int, str, dict[str, float]]] = []
    events: list[EventRecord] = []

    while not state.complete and presented < max_presentations:
        if position >= len(deck):
            reshuffle_rng.shuffle(deck)
            position = 0
        card = deck[position]
        position += 1
        presented += 1

        if variant == "noisy":
            percept = wcst_noisy_percept(card, seed=f"{seed}:{presented}")
        else:
            percept = wcst_percept(card)
        observed = graph.observe(percept)
        action = graph.select_action(observed.category_id)
        pile = WCST_ACTIONS.index(action) + 1
        rule_before = state.active_rule
        reward, state = wcst_oracle(state, card, pile)
        result = graph.record_reward(observed.category_id, percept, action, reward)

        snapshot = {fid: graph.weights.features[fid] for fid in graph.feature_ids}
        snapshot["experience"] = graph.weights.experience
        weights_log.append(snapshot)
        if state.active_rule != rule_before:
            completions.append((presented, rule_before, snapshot))
        events.append(
            make_event(
                presented,
                f"{card.color}-{card.form}-{card.number}#{presented}",
                observed.category_id,
                action,
                reward,
                result,
                graph,
            )
        )

    return WcstRunStats(
        completed=state.complete,
        cards_presented=presented,
        rule_changes=len(completions),
        per_step_weights=weights_log,
        rule_completions=completions,
        events=events,
        seed=seed,
        parameters=params,
        graph=graph,
    )
