from .events import EventRecord, format_event, write_event_log
from .runner import RunResult, run_scenario
from .sweep import (
    DEFAULT_DELTA_AW_GRID,
    DEFAULT_THETA_MC_GRID,
    SweepCell,
    SweepResult,
    sweep,
)
from .wcst_runner import WcstRunStats, run_wcst

__all__ = [
    "DEFAULT_DELTA_AW_GRID",
    "DEFAULT_THETA_MC_GRID",
    "EventRecord",
    "RunResult",
    "SweepCell",
    "SweepResult",
    "WcstRunStats",
    "format_event",
    "run_scenario",
    "run_wcst",
    "sweep",
    "write_event_log",
]
