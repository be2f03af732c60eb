"""Line-delimited interaction event records."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ..knowledge import KnowledgeGraph, RewardResult


@dataclass(frozen=True)
class EventRecord:
    step: int
    percept_id: str
    category_id: int
    action: str
    reward: str
    merges: tuple[tuple[int, int, int], ...]  # (first, second, into)
    splits: tuple[tuple[int, int], ...]  # (from, created)
    weights_after: dict[str, float]


def make_event(
    step: int,
    percept_id: str,
    category_id: int,
    action: str,
    reward: str,
    result: RewardResult,
    graph: KnowledgeGraph,
) -> EventRecord:
    splits = ()
    if result.split_category_id is not None:
        splits = ((category_id, result.split_category_id),)
    weights = {fid: graph.weights.features[fid] for fid in graph.feature_ids}
    weights["experience"] = graph.weights.experience
    return EventRecord(
        step=step,
        percept_id=percept_id,
        category_id=category_id,
        action=action,
        reward=reward,
        merges=tuple((m.merged[0], m.merged[1], m.into) for m in result.merges),
        splits=splits,
        weights_after=weights,
    )


def format_event(event: EventRecord) -> str:
    return json.dumps(
        {
            "step": event.step,
            "perceptId": event.percept_id,
            "categoryId": event.category_id,
            "action": event.action,
            "reward": event.reward,
            "merges": [list(m) for m in event.merges],
            "splits": [list(s) for s in event.splits],
            "weightsAfter": event.weights_after,
        }
    )


def write_event_log(events: Iterable[EventRecord], path: str | Path) -> None:
    Path(path).write_text("".join(format_event(e) + "\n" for e in events))
