"""Exact parameter solvers; see :mod:`tr2dom.solvers.search`."""

from .backend import available as available_backends
from .backend import current as current_backend
from .backend import set_backend
from .search import (
    DEFAULT_LIMIT,
    ENUM_LIMIT,
    STANDARD_KINDS,
    InfeasibleError,
    ParameterKind,
    SolveResult,
    SpecialSets,
    all_optimal,
    brute_force,
    clear_caches,
    closed_form,
    exact,
    near_stable_vertices,
    predicate,
    special_vertex_sets,
)

__all__ = [
    "DEFAULT_LIMIT",
    "ENUM_LIMIT",
    "STANDARD_KINDS",
    "InfeasibleError",
    "ParameterKind",
    "SolveResult",
    "SpecialSets",
    "all_optimal",
    "available_backends",
    "brute_force",
    "clear_caches",
    "closed_form",
    "current_backend",
    "exact",
    "near_stable_vertices",
    "predicate",
    "set_backend",
    "special_vertex_sets",
]
