"""Command-line harness: scenario runs, parameter sweeps, the card-sorting
test, and the teaching service.

Exit codes: 0 success, 2 configuration/usage error, 3 incomplete run.
"""

from __future__ import annotations

import json
import sys
from dataclasses import replace
from pathlib import Path

import click

from .knowledge import ConfigurationError, Parameters, save_graph
from .harness import (
    DEFAULT_DELTA_AW_GRID,
    DEFAULT_THETA_MC_GRID,
    run_scenario,
    run_wcst,
    sweep,
)
from .harness.events import write_event_log
from .scenarios.config import ScenarioConfig, load_scenario_config

EXIT_INCOMPLETE = 3

WCST_DEFAULTS = Parameters(rho_ra=0.0, delta_aw=0.08, theta_mc=2.1, theta_mf=0.3)
EXAMPLE_DEFAULTS = Parameters(rho_ra=0.0, delta_aw=4 / 9, theta_mc=6 / 7, theta_mf=0.3)


def _build_config(
    config_path, scenario, variant, seed, max_steps, theta_mc, theta_mf, delta_aw, rho_ra, order_policy
) -> ScenarioConfig:
    if config_path:
        config = load_scenario_config(config_path)
    else:
        config = ScenarioConfig()
    is_wcst = (scenario or config.scenario) == "wcst"
    if not config_path:
        config = replace(config, params=WCST_DEFAULTS if is_wcst else EXAMPLE_DEFAULTS)
        if is_wcst and variant is None:
            # noisy percepts keep the card test's knowledge consolidated
            config = replace(config, variant="noisy")
    params = config.params
    if theta_mc is not None:
        params = replace(params, theta_mc=theta_mc)
    if theta_mf is not None:
        params = replace(params, theta_mf=theta_mf)
    if delta_aw is not None:
        params = replace(params, delta_aw=delta_aw)
    if rho_ra is not None:
        params = replace(params, rho_ra=rho_ra)
    config = replace(
        config,
        scenario=scenario or config.scenario,
        variant=variant or config.variant,
        seed=config.seed if seed is None else seed,
        max_steps=config.max_steps if max_steps is None else max_steps,
        order_policy=order_policy or config.order_policy,
        params=params,
    )
    try:
        config.validate()
    except (ValueError, ConfigurationError) as exc:
        raise click.UsageError(str(exc)) from exc
    return config


def _common_options(fn):
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True), default=None,
                     help="Scenario config JSON; flags override its fields."),
        click.option("--scenario", type=click.Choice(["example", "wcst"]), default=None),
        click.option("--variant", type=click.Choice(["exact", "noisy"]), default=None),
        click.option("--seed", type=int, default=None),
        click.option("--theta-mc", type=float, default=None),
        click.option("--theta-mf", type=float, default=None),
        click.option("--delta-aw", type=float, default=None),
        click.option("--rho-ra", type=float, default=None),
        click.option("--max-steps", type=int, default=None),
        click.option("--order-policy", type=click.Choice(["round-robin", "fixed", "random"]), default=None),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


@click.group()
def main() -> None:
    """Online category learning: scenario runs, sweeps, and the teaching service."""


@main.command()
@_common_options
@click.option("--out", type=click.Path(), default=None, help="Write the event log here (jsonl).")
@click.option("--graph-out", type=click.Path(), default=None, help="Save the final graph document.")
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl"]), default="jsonl")
def run(config_path, scenario, variant, seed, theta_mc, theta_mf, delta_aw, rho_ra,
        max_steps, order_policy, out, graph_out, fmt):
    """Run one scenario and report the summary as JSON on stdout."""
    config = _build_config(config_path, scenario, variant, seed, max_steps,
                           theta_mc, theta_mf, delta_aw, rho_ra, order_policy)
    if config.scenario == "wcst":
        _run_wcst_command(config, out, graph_out)
        return
    result = run_scenario(config, event_log_path=out if fmt == "jsonl" else None)
    if out and fmt == "csv":
        Path(out).write_text(_events_to_csv(result.events))
        result.event_log_path = str(out)
    if graph_out:
        graph = _replay_graph(config)
        save_graph(graph, graph_out)
    summary = result.to_row()
    summary["parameters"] = _params_doc(config.params)
    click.echo(json.dumps(summary))
    if not result.reached:
        sys.exit(EXIT_INCOMPLETE)


def _replay_graph(config: ScenarioConfig):
    from .knowledge import KnowledgeGraph
    from .scenarios.example import (
        EXAMPLE_ACTIONS,
        EXAMPLE_SCHEMA,
        example_oracle,
        example_percept,
    )
    from .harness.runner import _presentation_stream

    graph = KnowledgeGraph(EXAMPLE_SCHEMA, EXAMPLE_ACTIONS, params=config.params, seed=config.seed)
    stream = _presentation_stream(config.order_policy, config.seed)
    for step in range(1, config.max_steps + 1):
        kind = next(stream)
        percept = example_percept(kind, config.variant, seed=f"{config.seed}:{step}")
        observed = graph.observe(percept)
        action = graph.select_action(observed.category_id)
        graph.record_reward(observed.category_id, percept, action, example_oracle(kind, action))
    return graph


def _events_to_csv(events) -> str:
    lines = ["step,percept_id,category_id,action,reward,merges,splits,weights_after"]
    for e in events:
        merges = ";".join("+".join(map(str, m)) for m in e.merges)
        splits = ";".join("+".join(map(str, s)) for s in e.splits)
        weights = ";".join(f"{k}={v!r}" for k, v in e.weights_after.items())
        lines.append(
            f"{e.step},{e.percept_id},{e.category_id},{e.action},{e.reward},"
            f"{merges},{splits},{weights}"
        )
    return "\n".join(lines) + "\n"


def _params_doc(params: Parameters) -> dict:
    return {
        "rhoRa": params.rho_ra,
        "deltaAw": params.delta_aw,
        "thetaMc": params.theta_mc,
        "thetaMf": params.theta_mf,
    }


def _run_wcst_command(config: ScenarioConfig, out, graph_out) -> None:
    stats = run_wcst(params=config.params, seed=config.seed,
                     max_presentations=config.max_steps if config.max_steps else 600,
                     variant=config.variant)
    if out:
        write_event_log(stats.events, out)
    if graph_out and stats.graph is not None:
        save_graph(stats.graph, graph_out)
    summary = {
        "completed": stats.completed,
        "cardsPresented": stats.cards_presented,
        "ruleChanges": stats.rule_changes,
        "parameters": _params_doc(config.params),
        "seed": config.seed,
    }
    click.echo(json.dumps(summary))
    if not stats.completed:
        sys.exit(EXIT_INCOMPLETE)


@main.command(name="sweep")
@_common_options
@click.option("--theta-mc-range", nargs=3, type=float, default=None,
              help="lo hi steps for the merge threshold grid.")
@click.option("--delta-aw-range", nargs=3, type=float, default=None,
              help="lo hi steps for the weight step grid.")
@click.option("--out", type=click.Path(), default=None, help="Write results here.")
@click.option("--format", "fmt", type=click.Choice(["csv", "jsonl"]), default="csv")
def sweep_command(config_path, scenario, variant, seed, theta_mc, theta_mf, delta_aw,
                  rho_ra, max_steps, order_policy, theta_mc_range, delta_aw_range, out, fmt):
    """Sweep the (theta_mc, delta_aw) grid for the example scenario."""
    config = _build_config(config_path, scenario, variant, seed, max_steps,
                           theta_mc, theta_mf, delta_aw, rho_ra, order_policy)
    if config.scenario != "example":
        raise click.UsageError("sweep supports the example scenario only")

    def expand(rng, default):
        if rng is None:
            return default
        lo, hi, steps = rng
        n = int(steps)
        if n < 1:
            raise click.UsageError("range steps must be >= 1")
        return [lo + (hi - lo) * i / max(1, n - 1) for i in range(n)]

    result = sweep(
        config,
        expand(theta_mc_range, DEFAULT_THETA_MC_GRID),
        expand(delta_aw_range, DEFAULT_DELTA_AW_GRID),
    )
    if fmt == "csv":
        payload = result.to_csv()
    else:
        payload = "".join(
            json.dumps({"thetaMc": c.theta_mc, "deltaAw": c.delta_aw, **c.result.to_row()}) + "\n"
            for c in result.cells
        )
    if out:
        Path(out).write_text(payload)
        click.echo(f"wrote {len(result.cells)} cells to {out}")
    else:
        click.echo(payload, nl=False)


@main.command()
@_common_options
@click.option("--runs", type=int, default=1, help="Number of seeded runs (seed, seed+1, ...).")
@click.option("--out", type=click.Path(), default=None, help="Write per-run summaries (jsonl).")
def wcst(config_path, scenario, variant, seed, theta_mc, theta_mf, delta_aw, rho_ra,
         max_steps, order_policy, runs, out):
    """Run the card-sorting test and report completion statistics."""
    config = _build_config(config_path, "wcst", variant, seed, max_steps,
                           theta_mc, theta_mf, delta_aw, rho_ra, order_policy)
    cap = config.max_steps if config.max_steps else 600
    summaries = []
    for i in range(runs):
        stats = run_wcst(params=config.params, seed=config.seed + i,
                         max_presentations=cap, variant=config.variant)
        summaries.append(
            {
                "seed": config.seed + i,
                "completed": stats.completed,
                "cardsPresented": stats.cards_presented,
                "ruleChanges": stats.rule_changes,
                "weightsAtEnd": stats.per_step_weights[-1] if stats.per_step_weights else {},
            }
        )
    payload = "".join(json.dumps(s) + "\n" for s in summaries)
    if out:
        Path(out).write_text(payload)
    click.echo(payload, nl=False)
    if not all(s["completed"] for s in summaries):
        sys.exit(EXIT_INCOMPLETE)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8420)
@click.option("--frontend", type=click.Path(), default=None,
              help="Directory with the built UI to serve statically.")
def serve(host, port, frontend):
    """Start the teaching service."""
    import uvicorn

    from .service import create_app

    frontend_dir = frontend
    if frontend_dir is None:
        candidate = Path.cwd() / "frontend" / "dist"
        frontend_dir = candidate if candidate.is_dir() else None
    uvicorn.run(create_app(frontend_dir), host=host, port=port)


if __name__ == "__main__":
    main()
