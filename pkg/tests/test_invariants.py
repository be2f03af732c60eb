"""Structural invariants under randomized operation sequences."""

import pytest

from categraph import KnowledgeGraph, Parameters
from categraph.scenarios.example import EXAMPLE_ACTIONS, EXAMPLE_SCHEMA, example_percept

from walker import run_walk


@pytest.mark.parametrize("seed_block", range(10))
def test_random_walks_hold_invariants(seed_block):
    for seed in range(seed_block * 25, (seed_block + 1) * 25):
        run_walk(seed, steps=12)


def test_determinism_under_fixed_seed():
    for seed in range(40):
        first = run_walk(seed, steps=12, collect_log=True, check_every_step=False)
        second = run_walk(seed, steps=12, collect_log=True, check_every_step=False)
        assert first == second, f"walk {seed} diverged between runs"


def test_degenerate_low_threshold_merges_everything():
    # far below -(sum of weights): every pair merges while no experiences conflict
    graph = KnowledgeGraph(
        EXAMPLE_SCHEMA, EXAMPLE_ACTIONS, params=Parameters(theta_mc=-10.0)
    )
    for kind in ("greenApple", "redApple", "brownApple", "greenBlock"):
        percept = example_percept(kind, "exact")
        observed = graph.observe(percept)
        graph.record_reward(observed.category_id, percept, "fruitBasket", "neutral")
    assert len(graph.categories) == 1


def test_degenerate_high_threshold_counts_distinct_percepts():
    graph = KnowledgeGraph(
        EXAMPLE_SCHEMA, EXAMPLE_ACTIONS, params=Parameters(theta_mc=3.0 + 1e-6)
    )
    kinds = ("greenApple", "redApple", "brownApple", "greenBlock", "redBlock", "yellowBlock")
    for kind in kinds:
        percept = example_percept(kind, "exact")
        observed = graph.observe(percept)
        graph.record_reward(observed.category_id, percept, "toyBox", "positive")
    assert len(graph.categories) == len(kinds)
