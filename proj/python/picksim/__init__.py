"""Warehouse picking simulation: storage policies, slot allocation and weekly scenario runs."""

from ._core import (
    PairedTest,
    StatsSummary,
    allocate_slots,
    gap_percent,
    generate_data,
    paired_test,
    run_cli,
    run_scenario,
    summarize,
    week_seed,
)

__all__ = [
    "PairedTest",
    "StatsSummary",
    "allocate_slots",
    "gap_percent",
    "generate_data",
    "paired_test",
    "run_cli",
    "run_scenario",
    "summarize",
    "week_seed",
]
