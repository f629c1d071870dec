"""Disjunctive total domination toolkit."""

import json as _json

from ._core import (
    DomainError,
    Graph,
    IoError,
    classify,
    construct_dtd_clawfree,
    dtd_cycle_formula,
    dtd_path_formula,
    enumerate,
    exact_number,
    exceptional_member,
    generate,
    gt_cycle_formula,
    is_dtd_set,
    is_isomorphic,
    satisfies,
    uncovered,
)
from ._core import verify as _verify


def verify(theorem, max_n=None, jobs=1):
    """Run a theorem checker and return the report as a dict."""
    return _json.loads(_verify(theorem, max_n, jobs))


__all__ = [
    "DomainError",
    "Graph",
    "IoError",
    "classify",
    "construct_dtd_clawfree",
    "dtd_cycle_formula",
    "dtd_path_formula",
    "enumerate",
    "exact_number",
    "exceptional_member",
    "generate",
    "gt_cycle_formula",
    "is_dtd_set",
    "is_isomorphic",
    "satisfies",
    "uncovered",
    "verify",
]
