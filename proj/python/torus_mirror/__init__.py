"""Exact and numeric checks for mirror pairs of tori."""

import json

from . import _core
from ._core import (
    ConditionViolated,
    ConstructionFailed,
    InputError,
    NotPositiveDefinite,
    SingularMatrix,
    TorusMirrorError,
    biholomorphism,
    bundle_rank,
    find_delta,
    is_holomorphic,
    smith_normal_form,
    suite_names,
)

__all__ = [
    "ConditionViolated",
    "ConstructionFailed",
    "InputError",
    "NotPositiveDefinite",
    "SingularMatrix",
    "TorusMirrorError",
    "biholomorphism",
    "bundle_rank",
    "command_report",
    "find_delta",
    "is_holomorphic",
    "run_suite",
    "smith_normal_form",
    "suite_names",
]


def run_suite(suite, seed=0, samples=50, tol=1e-8, bound=1):
    """Run a verification suite and return the report as a dict."""
    return json.loads(_core.run_suite(suite, seed, samples, tol, bound))


def command_report(command, data=None, seed=0, samples=50, tol=1e-8, bound=1):
    """Run a CLI command on a JSON-compatible input and return the report as a dict."""
    text = "" if data is None else json.dumps(data)
    return json.loads(_core.command_report(command, text, seed, samples, tol, bound))
