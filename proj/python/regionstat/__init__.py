"""Inequality and concentration analytics over territorial wealth panels.

Thin wrapper around the compiled ``_regionstat`` extension: entropy/Theil,
top-K Herfindahl, Gini and Lorenz kernels, descriptive statistics, panel
harmonization across administrative boundary changes, and the in-process
CLI entry point.
"""

from ._regionstat import (  # noqa: F401
    Crosswalk,
    IndexBundle,
    Panel,
    RegionstatError,
    SummaryStats,
    cli_run,
    compute_unit_year,
    entropy,
    gini,
    gini_from_lorenz,
    harmonize,
    hhi_normalized,
    hhi_top_k,
    index_bundle,
    load_crosswalk,
    load_panel,
    lorenz_curve,
    shares,
    summarize,
    theil,
    validate,
)

__version__ = "1.0.0"

__all__ = [
    "Crosswalk",
    "IndexBundle",
    "Panel",
    "RegionstatError",
    "SummaryStats",
    "cli_run",
    "compute_unit_year",
    "entropy",
    "gini",
    "gini_from_lorenz",
    "harmonize",
    "hhi_normalized",
    "hhi_top_k",
    "index_bundle",
    "load_crosswalk",
    "load_panel",
    "lorenz_curve",
    "shares",
    "summarize",
    "theil",
    "validate",
]
