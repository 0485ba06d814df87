"""Exact character theory, Satake-side Hecke operators and smoothed
Rankin-Selberg sums for the icosahedral tower, with trace-identity
certification. The heavy lifting lives in the C++ core."""

from ._core import (
    character_table,
    descent_cases,
    descent_fibers,
    generation,
    nonzero_probe,
    ramanujan_bound,
    restrict_row,
    satake,
    smoothed_ratio,
    sym_power,
    trace_identity,
    __version__,
)

__all__ = [
    "character_table",
    "descent_cases",
    "descent_fibers",
    "generation",
    "nonzero_probe",
    "ramanujan_bound",
    "restrict_row",
    "satake",
    "smoothed_ratio",
    "sym_power",
    "trace_identity",
    "__version__",
]
