"""Card-sorting task with a hidden, rotating rule.

Four stimulus piles are fixed: one red triangle, two green stars, three
yellow crosses, four blue circles.  The subject sorts a 60-card deck (all
color x form x number combinations except the four stimulus cards) and is
rewarded by the currently active rule (color, form, or number), which
silently advances after every fifth consecutive correct assignment; the
test completes after nine such runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import NamedTuple

from ..knowledge import NEGATIVE, POSITIVE, FeatureSpec, FeatureVector, normalize_percept

WCST_COLORS = ("red", "green", "yellow", "blue")
WCST_FORMS = ("triangle", "star", "cross", "circle")
WCST_NUMBERS = (1, 2, 3, 4)
WCST_RULES = ("color", "form", "number")
WCST_ACTIONS = ("pile1", "pile2", "pile3", "pile4")
COMPLETED_RUNS_TARGET = 9
RUN_LENGTH = 5

WCST_SCHEMA = (
    FeatureSpec("color", WCST_COLORS),
    FeatureSpec("form", WCST_FORMS),
    FeatureSpec("number", tuple(str(n) for n in WCST_NUMBERS)),
)


class WcstCard(NamedTuple):
    color: str
    form: str
    number: int


# pile i matches the i-th color, form, and number
STIMULUS_CARDS = (
    WcstCard("red", "triangle", 1),
    WcstCard("green", "star", 2),
    WcstCard("yellow", "cross", 3),
    WcstCard("blue", "circle", 4),
)


@dataclass(frozen=True)
class WcstState:
    active_rule: str = "color"
    consecutive_correct: int = 0
    completed_runs: int = 0

    @property
    def complete(self) -> bool:
        return self.completed_runs >= COMPLETED_RUNS_TARGET


def wcst_deck(seed: int | str = 0) -> list[WcstCard]:
    """Seeded shuffle of the 60 combinations that are not stimulus cards."""
    cards = [
        WcstCard(color, form, number)
        for color in WCST_COLORS
        for form in WCST_FORMS
        for number in WCST_NUMBERS
        if WcstCard(color, form, number) not in STIMULUS_CARDS
    ]
    random.Random(f"wcst-deck|{seed}").shuffle(cards)
    return cards


def wcst_percept(card: WcstCard) -> dict[str, FeatureVector]:
    """Exact unit feature vectors for the card's color, form, and count."""

    def unit(options, value):
        return [1.0 if v == value else 0.0 for v in options]

    return {
        "color": normalize_percept("color", unit(WCST_COLORS, card.color)),
        "form": normalize_percept("form", unit(WCST_FORMS, card.form)),
        "number": normalize_percept("number", unit(WCST_NUMBERS, card.number)),
    }


def wcst_noisy_percept(card: WcstCard, seed: int | str = 0) -> dict[str, FeatureVector]:
    """Classified-correct percept with uncertainty: the card's true value
    draws its mass uniformly from [0.7, 1] and the remainder spreads over the
    other characteristics with seeded proportions (the same noise model as
    the sorting scenario's noisy variant).

    Point-like intervals almost never recapture noisy percepts, so category
    knowledge survives only through interval folding at merges; that keeps
    the graph consolidated instead of accumulating one category per card.
    """
    rng = random.Random(f"wcst|{card.color}|{card.form}|{card.number}|{seed}")

    def noisy(options, value):
        idx = list(options).index(value)
        dominant = rng.uniform(0.7, 1.0)
        rest = [rng.random() for _ in range(len(options) - 1)]
        total = sum(rest) or 1.0
        values = []
        cursor = 0
        for i in range(len(options)):
            if i == idx:
                values.append(dominant)
            else:
                values.append((1.0 - dominant) * rest[cursor] / total)
                cursor += 1
        return values

    return {
        "color": normalize_percept("color", noisy(WCST_COLORS, card.color)),
        "form": normalize_percept("form", noisy(WCST_FORMS, card.form)),
        "number": normalize_percept("number", noisy(WCST_NUMBERS, card.number)),
    }


def wcst_oracle(state: WcstState, card: WcstCard, pile: int) -> tuple[str, WcstState]:
    """Reward the assignment of `card` to `pile` (1..4) under the active rule
    and return the advanced state.

    The rule changes exactly on the fifth consecutive correct assignment
    (cycling color -> form -> number -> color), which also counts one
    completed run.
    """
    if state.complete:
        raise ValueError("the test is already complete")
    if pile not in (1, 2, 3, 4):
        raise ValueError(f"pile must be 1..4, got {pile!r}")
    stimulus = STIMULUS_CARDS[pile - 1]
    correct = getattr(card, state.active_rule) == getattr(stimulus, state.active_rule)
    if not correct:
        return NEGATIVE, replace(state, consecutive_correct=0)
    streak = state.consecutive_correct + 1
    if streak < RUN_LENGTH:
        return POSITIVE, replace(state, consecutive_correct=streak)
    next_rule = WCST_RULES[(WCST_RULES.index(state.active_rule) + 1) % len(WCST_RULES)]
    return POSITIVE, WcstState(
        active_rule=next_rule,
        consecutive_correct=0,
        completed_runs=state.completed_runs + 1,
    )
