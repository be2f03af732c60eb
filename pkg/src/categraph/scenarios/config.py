"""Scenario run configuration and its JSON file format."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..knowledge import Parameters

ORDER_POLICIES = ("round-robin", "fixed", "random")


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str = "example"  # "example" | "wcst"
    variant: str = "exact"  # "exact" | "noisy" (example scenario only)
    seed: int = 0
    max_steps: int = 200
    order_policy: str = "round-robin"
    params: Parameters = Parameters()

    def validate(self) -> None:
        if self.scenario not in ("example", "wcst"):
            raise ValueError(f"unknown scenario {self.scenario!r}")
        if self.variant not in ("exact", "noisy"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.max_steps < 0:
            raise ValueError("max_steps must be nonnegative")
        if self.order_policy not in ORDER_POLICIES:
            raise ValueError(f"unknown presentation order policy {self.order_policy!r}")
        self.params.validate()


def save_scenario_config(config: ScenarioConfig, path: str | Path) -> None:
    doc = {
        "scenario": config.scenario,
        "variant": config.variant,
        "seed": config.seed,
        "maxSteps": config.max_steps,
        "orderPolicy": config.order_policy,
        "parameters": {
            "rhoRa": config.params.rho_ra,
            "deltaAw": config.params.delta_aw,
            "thetaMc": config.params.theta_mc,
            "thetaMf": config.params.theta_mf,
        },
    }
    Path(path).write_text(json.dumps(doc, indent=2))


def load_scenario_config(path: str | Path) -> ScenarioConfig:
    doc = json.loads(Path(path).read_text())
    raw_params = doc.get("parameters", {})
    config = ScenarioConfig(
        scenario=doc.get("scenario", "example"),
        variant=doc.get("variant", "exact"),
        seed=int(doc.get("seed", 0)),
        max_steps=int(doc.get("maxSteps", 200)),
        order_policy=doc.get("orderPolicy", "round-robin"),
        params=Parameters(
            rho_ra=float(raw_params.get("rhoRa", 0.0)),
            delta_aw=float(raw_params.get("deltaAw", 0.1)),
            theta_mc=float(raw_params.get("thetaMc", 1.0)),
            theta_mf=float(raw_params.get("thetaMf", 0.3)),
        ),
    )
    config.validate()
    return config
