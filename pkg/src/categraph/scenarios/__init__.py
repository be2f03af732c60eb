from .example import (
    EXAMPLE_ACTIONS,
    EXAMPLE_KINDS,
    EXAMPLE_SCHEMA,
    TARGET_PARTITION,
    desired_partition_reached,
    example_oracle,
    example_percept,
    kind_partition_matches_target,
    residual_category_count,
)
from .wcst import (
    WCST_ACTIONS,
    WCST_RULES,
    WCST_SCHEMA,
    STIMULUS_CARDS,
    WcstCard,
    WcstState,
    wcst_deck,
    wcst_noisy_percept,
    wcst_oracle,
    wcst_percept,
)
from .config import ScenarioConfig, load_scenario_config, save_scenario_config

__all__ = [
    "EXAMPLE_ACTIONS",
    "EXAMPLE_KINDS",
    "EXAMPLE_SCHEMA",
    "STIMULUS_CARDS",
    "ScenarioConfig",
    "TARGET_PARTITION",
    "WCST_ACTIONS",
    "WCST_RULES",
    "WCST_SCHEMA",
    "WcstCard",
    "WcstState",
    "desired_partition_reached",
    "example_oracle",
    "example_percept",
    "kind_partition_matches_target",
    "load_scenario_config",
    "residual_category_count",
    "save_scenario_config",
    "wcst_deck",
    "wcst_noisy_percept",
    "wcst_oracle",
    "wcst_percept",
]
