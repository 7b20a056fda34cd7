"""Sweeps, built-in generation and the equality-case instances."""

from .figure1 import Figure1Report, Instance, builtin_instances, verify_figure1
from .generate import MAX_GENERATED_ORDER, generate_all_graphs
from .sweep import (
    CHECKS,
    JOBS_ENV,
    Filter,
    SweepConfig,
    SweepError,
    SweepReport,
    replay_certificate,
    run_sweep,
    write_report,
)

__all__ = [
    "CHECKS",
    "Figure1Report",
    "Filter",
    "Instance",
    "JOBS_ENV",
    "MAX_GENERATED_ORDER",
    "SweepConfig",
    "SweepError",
    "SweepReport",
    "builtin_instances",
    "generate_all_graphs",
    "replay_certificate",
    "run_sweep",
    "verify_figure1",
    "write_report",
]
