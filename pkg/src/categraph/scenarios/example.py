"""The sorting scenario: colored apples and toy blocks, three target bins.

Apples sort into the fruit basket (green, red) or the rubbish bin (brown);
every block belongs in the toy box.  The desired end state groups green and
red apples together, brown apples alone, and all blocks together.
"""

from __future__ import annotations

import random
from typing import Mapping

from ..knowledge import (
    NEGATIVE,
    POSITIVE,
    FeatureSpec,
    FeatureVector,
    KnowledgeGraph,
    normalize_percept,
)

EXAMPLE_SCHEMA = (
    FeatureSpec("color", ("red", "green", "yellow", "brown")),
    FeatureSpec("form", ("rectangular", "circular")),
)
EXAMPLE_ACTIONS = ("fruitBasket", "rubbishBin", "toyBox")
EXAMPLE_KINDS = (
    "greenApple",
    "redApple",
    "brownApple",
    "greenBlock",
    "redBlock",
    "yellowBlock",
)

# (color index, form index) of each kind: colors follow the schema order,
# forms are rectangular=0 / circular=1
_KIND_ENCODING = {
    "greenApple": (1, 1),
    "redApple": (0, 1),
    "brownApple": (3, 1),
    "greenBlock": (1, 0),
    "redBlock": (0, 0),
    "yellowBlock": (2, 0),
}

TARGET_PARTITION = (
    frozenset({"greenApple", "redApple"}),
    frozenset({"brownApple"}),
    frozenset({"greenBlock", "redBlock", "yellowBlock"}),
)


def _unit(arity: int, index: int) -> list[float]:
    values = [0.0] * arity
    values[index] = 1.0
    return values


def _noisy(arity: int, index: int, rng: random.Random) -> list[float]:
    dominant = rng.uniform(0.7, 1.0)
    rest = [rng.random() for _ in range(arity - 1)]
    rest_total = sum(rest) or 1.0
    values = []
    cursor = 0
    for i in range(arity):
        if i == index:
            values.append(dominant)
        else:
            values.append((1.0 - dominant) * rest[cursor] / rest_total)
            cursor += 1
    return values


def example_percept(
    kind: str, variant: str = "exact", seed: int | str = 0
) -> dict[str, FeatureVector]:
    """Percept for one object kind.

    "exact" yields unit vectors; "noisy" draws the true characteristic
    uniformly from [0.7, 1] and spreads the remainder over the others with
    seeded proportions.  Identical (kind, variant, seed) triples always
    produce identical percepts.
    """
    color_idx, form_idx = _KIND_ENCODING[kind]
    schema = {spec.feature_id: spec for spec in EXAMPLE_SCHEMA}
    if variant == "exact":
        raw = {
            "color": _unit(schema["color"].arity, color_idx),
            "form": _unit(schema["form"].arity, form_idx),
        }
    elif variant == "noisy":
        rng = random.Random(f"{kind}|{variant}|{seed}")
        raw = {
            "color": _noisy(schema["color"].arity, color_idx, rng),
            "form": _noisy(schema["form"].arity, form_idx, rng),
        }
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return {fid: normalize_percept(fid, values) for fid, values in raw.items()}


def example_oracle(kind: str, action: str) -> str:
    """Reward for sorting the kind with the action; positive only for the
    single correct bin of each kind."""
    if kind not in _KIND_ENCODING:
        raise ValueError(f"unknown kind {kind!r}")
    if action not in EXAMPLE_ACTIONS:
        raise ValueError(f"unknown action {action!r}")
    correct = {
        "greenApple": "fruitBasket",
        "redApple": "fruitBasket",
        "brownApple": "rubbishBin",
        "greenBlock": "toyBox",
        "redBlock": "toyBox",
        "yellowBlock": "toyBox",
    }[kind]
    return POSITIVE if action == correct else NEGATIVE


def _prototype_assignments(graph: KnowledgeGraph) -> dict[str, int | None]:
    return {
        kind: graph.classify(example_percept(kind, "exact")) for kind in EXAMPLE_KINDS
    }


def kind_partition_matches_target(assignment: Mapping[str, int | None]) -> bool:
    """True when the kind -> category assignment induces exactly the target
    groups in distinct categories, with every kind assigned."""
    if any(assignment.get(kind) is None for kind in EXAMPLE_KINDS):
        return False
    group_ids = []
    for group in TARGET_PARTITION:
        ids = {assignment[kind] for kind in group}
        if len(ids) != 1:
            return False
        group_ids.append(next(iter(ids)))
    return len(set(group_ids)) == len(TARGET_PARTITION)


def desired_partition_reached(graph: KnowledgeGraph) -> bool:
    """Classify one exact prototype per kind and test whether that induces
    exactly the target partition; residual categories are tolerated only if
    no prototype fits them."""
    assignment = _prototype_assignments(graph)
    if not kind_partition_matches_target(assignment):
        return False
    partition_categories = set(assignment.values())
    for kind in EXAMPLE_KINDS:
        fits = graph.fitting_categories(example_percept(kind, "exact"))
        if any(cid not in partition_categories for cid in fits):
            return False
    return True


def residual_category_count(graph: KnowledgeGraph, assigned: set[int]) -> int:
    """Categories that no presently assigned kind occupies."""
    return len(set(graph.categories) - assigned)
