"""Laurent polynomial cancellation toolkit: Python front end."""

import json

from ._core import (
    SCHEMA_VERSION,
    LaurentError,
    canonical_poly,
    hnf,
    kernel,
    normalize_session,
    snf,
    subcommands,
    unit_decomposition,
    unit_normalize,
)

__all__ = [
    "SCHEMA_VERSION",
    "LaurentError",
    "canonical_poly",
    "hnf",
    "kernel",
    "normalize_session",
    "run",
    "snf",
    "subcommands",
    "unit_decomposition",
    "unit_normalize",
]


def run(text, verb, seed=None, targets=(), trace=False):
    """Run one subcommand on session text; returns (exit_code, report dict)."""
    from ._core import run_json

    code, report, _ = run_json(text, verb, seed, list(targets), trace)
    return code, json.loads(report)
