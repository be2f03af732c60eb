"""Parameter sweep over the merge threshold and the weight-adaptation step.

One seeded run per grid cell; exploration probability and the interval
merge threshold stay fixed.  CSV output carries one row per cell.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, replace
from pathlib import Path

from ..scenarios.config import ScenarioConfig
from .runner import RunResult, run_scenario

def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]

# theta_mc spans the attainable similarity range [0, feature count + 1];
# delta_aw from no adaptation to aggressive shifting
DEFAULT_THETA_MC_GRID = _linspace(0.0, 3.0, 15)
DEFAULT_DELTA_AW_GRID = _linspace(0.0, 0.5, 10)

@dataclass(frozen=True)
class SweepCell:
    theta_mc: float
    delta_aw: float
    result: RunResult

@dataclass
class SweepResult:
    theta_mc_values: list[float]
    delta_aw_values: list[float]
    cells: list[SweepCell]

    def cell(self, theta_mc: float, delta_aw: float) -> SweepCell:
        for c in self.cells:
            if c.theta_mc == theta_mc and c.delta_aw == delta_aw:
                return c
        raise KeyError((theta_mc, delta_aw))

    def successes(self) -> list[SweepCell]:
        return [c for c in self.cells if c.result.reached]

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(
            "theta_mc,delta_aw,reached,steps_to_desired,first_full_coverage_step,"
            "final_categories,residual_categories,seed\n"
        )
        for c in self.cells:
            r = c.result
            out.write(
                f"{c.theta_mc!r},{c.delta_aw!r},{str(r.reached).lower()},"
                f"{'' if r.steps_to_desired is None else r.steps_to_desired},"
                f"{'' if r.first_full_coverage_step is None else r.first_full_coverage_step},"
                f"{r.final_category_count},{r.residual_category_count},{r.seed}\n"
            )
        return out.getvalue()

    def save_csv(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv())

def sweep(
    base_config: ScenarioConfig,
    theta_mc_values: list[float] | None = None,
    delta_aw_values: list[float] | None = None,
) -> SweepResult:
    """Run the scenario once per (theta_mc, delta_aw) grid cell."""
    thetas = list(theta_mc_values if theta_mc_values is not None else DEFAULT_THETA_MC_GRID)
    deltas = list(delta_aw_values if delta_aw_values is not None else DEFAULT_DELTA_AW_GRID)
    if not thetas or not deltas:
        raise ValueError("sweep ranges must be non-empty")
    cells = []
    for theta in thetas:
        for delta in deltas:
            params = replace(base_config.params, theta_mc=theta, delta_aw=delta)
            config = replace(base_config, params=params)
            cells.append(SweepCell(theta, delta, run_scenario(config)))
    return SweepResult(thetas, deltas, cells)
