"""Full interaction loop for the example scenario.

Each step presents one object: observe, select an action, collect the
oracle reward, record it.  The run is "desired" from the first step after
which the kind -> category assignment matches the target partition and
never changes again before the run ends.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

from ..knowledge import KnowledgeGraph, Parameters
from ..scenarios.config import ScenarioConfig
from ..scenarios.example import (
    EXAMPLE_ACTIONS,
    EXAMPLE_KINDS,
    EXAMPLE_SCHEMA,
    example_oracle,
    example_percept,
    kind_partition_matches_target,
)
from .events import EventRecord, make_event, write_event_log


@dataclass
class RunResult:
    steps_to_desired: int | None
    first_full_coverage_step: int | None
    final_category_count: int
    residual_category_count: int
    seed: int
    parameters: Parameters
    event_log_path: str | None = None
    events: list[EventRecord] = field(default_factory=list)

    @property
    def reached(self) -> bool:
        return self.steps_to_desired is not None

    def to_row(self) -> dict:
        return {
            "steps_to_desired": self.steps_to_desired,
            "first_full_coverage_step": self.first_full_coverage_step,
            "final_categories": self.final_category_count,
            "residual_categories": self.residual_category_count,
            "reached": self.reached,
            "seed": self.seed,
        }


def _presentation_stream(policy: str, seed: int):
    rng = random.Random(f"order|{seed}")
    if policy == "fixed":
        while True:
            yield from EXAMPLE_KINDS
    elif policy == "round-robin":
        while True:
            batch = list(EXAMPLE_KINDS)
            rng.shuffle(batch)
            yield from batch
    elif policy == "random":
        while True:
            yield EXAMPLE_KINDS[rng.randrange(len(EXAMPLE_KINDS))]
    else:
        raise ValueError(f"unknown presentation order policy {policy!r}")


def run_scenario(config: ScenarioConfig, event_log_path: str | Path | None = None) -> RunResult:
    """Run the example scenario to max_steps and measure when the desired
    partition was reached and kept."""
    config.validate()
    if config.scenario != "example":
        raise ValueError("run_scenario handles the example scenario; use run_wcst for wcst")
    graph = KnowledgeGraph(
        EXAMPLE_SCHEMA, EXAMPLE_ACTIONS, params=config.params, seed=config.seed
    )
    stream = _presentation_stream(config.order_policy, config.seed)
    assignment: dict[str, int] = {}
    seen: set[str] = set()
    coverage_step: int | None = None
    partition_ok: list[bool] = []
    events: list[EventRecord] = []

    for step in range(1, config.max_steps + 1):
        kind = next(stream)
        percept = example_percept(kind, config.variant, seed=f"{config.seed}:{step}")
        observed = graph.observe(percept)
        action = graph.select_action(observed.category_id)
        reward = example_oracle(kind, action)
        result = graph.record_reward(observed.category_id, percept, action, reward)

        # follow category renames through merges for every tracked kind
        assignment[kind] = observed.category_id
        if result.split_category_id is not None:
            assignment[kind] = result.split_category_id
        for merge in result.merges:
            for k, cid in assignment.items():
                if cid in merge.merged:
                    assignment[k] = merge.into

        seen.add(kind)
        if coverage_step is None and len(seen) == len(EXAMPLE_KINDS):
            coverage_step = step
        partition_ok.append(kind_partition_matches_target(assignment))
        events.append(
            make_event(step, f"{kind}#{step}", observed.category_id, action, reward, result, graph)
        )

    steps_to_desired: int | None = None
    if partition_ok and partition_ok[-1]:
        last_bad = -1
        for i, ok in enumerate(partition_ok):
            if not ok:
                last_bad = i
        steps_to_desired = last_bad + 2  # steps are 1-based
    occupied = set(assignment.values()) if len(seen) == len(EXAMPLE_KINDS) else set()
    result = RunResult(
        steps_to_desired=steps_to_desired,
        first_full_coverage_step=coverage_step,
        final_category_count=len(graph.categories),
        residual_category_count=len(set(graph.categories) - occupied),
        seed=config.seed,
        parameters=config.params,
        events=events,
    )
    if event_log_path is not None:
        write_event_log(events, event_log_path)
        result.event_log_path = str(event_log_path)
    return result
