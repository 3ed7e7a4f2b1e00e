"""Exact solvers for the six domination parameters and the near variant.

All parameters share one search core: set-valued parameters are searched as
indicator labelings over ``{0, 1}``, the Roman-style ones over ``{0, 1, 2}``.
``exact`` first finds the optimum with branch-and-bound (vertices by
descending degree), then a second pass in vertex order extracts the
lexicographically smallest optimal labeling so witnesses are reproducible.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

from .. import labeling as lab
from ..graph_core import Graph, SizeLimitError, vertex_classes
from ..labeling import Labeling
from . import backend

__all__ = [
    "ParameterKind",
    "SolveResult",
    "SpecialSets",
    "InfeasibleError",
    "exact",
    "brute_force",
    "all_optimal",
    "closed_form",
    "special_vertex_sets",
    "near_stable_vertices",
    "DEFAULT_LIMIT",
    "ENUM_LIMIT",
]

DEFAULT_LIMIT = 30
ENUM_LIMIT = 16


class InfeasibleError(ValueError):
    """No labeling of the requested kind exists (isolated vertex, total kind)."""


class ParameterKind(Enum):
    GAMMA = 0
    GAMMA_T = 1
    GAMMA_R2 = 2
    GAMMA_TR = 3
    GAMMA_TR2 = 4
    GAMMA_X2 = 5
    GAMMA_TR2_NEAR = 6

    @property
    def code(self) -> int:
        return self.value

    @property
    def is_set(self) -> bool:
        return self in (ParameterKind.GAMMA, ParameterKind.GAMMA_T, ParameterKind.GAMMA_X2)

    @property
    def is_total(self) -> bool:
        return self not in (ParameterKind.GAMMA, ParameterKind.GAMMA_R2)

    @property
    def cli_name(self) -> str:
        return self.name.lower().replace("_", "-")

    @classmethod
    def from_cli(cls, name: str) -> "ParameterKind":
        key = name.strip().upper().replace("-", "_")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown parameter {name!r}") from None


STANDARD_KINDS = tuple(k for k in ParameterKind if k is not ParameterKind.GAMMA_TR2_NEAR)


def predicate(kind: ParameterKind, vertex: int | None = None) -> Callable[[Graph, Labeling], bool]:
    """Membership test for ``kind`` from the labeling module (the independent check)."""
    if kind is ParameterKind.GAMMA:
        return lambda g, f: max(f.values, default=0) <= 1 and lab.is_DF(g, f)
    if kind is ParameterKind.GAMMA_T:
        return lambda g, f: max(f.values, default=0) <= 1 and lab.is_TDF(g, f)
    if kind is ParameterKind.GAMMA_R2:
        return lab.is_R2DF
    if kind is ParameterKind.GAMMA_TR:
        return lab.is_TRDF
    if kind is ParameterKind.GAMMA_TR2:
        return lab.is_TR2DF
    if kind is ParameterKind.GAMMA_X2:
        return lambda g, f: max(f.values, default=0) <= 1 and lab.is_double_dominating_set(g, f.part(1))
    return lambda g, f: lab.is_near_TR2DF(g, f, vertex)


@dataclass(frozen=True)
class SolveResult:
    kind: ParameterKind
    value: int | None
    witness: Labeling | None
    nodes_explored: int
    feasible: bool
    vertex: int | None = None

    @property
    def witness_set(self) -> frozenset[int] | None:
        """Positive vertices of the witness (the set itself for set parameters)."""
        if self.witness is None:
            return None
        return self.witness.part(1) | self.witness.part(2)


def _check_args(g: Graph, kind: ParameterKind, vertex: int | None) -> int:
    if g.n < 1:
        raise ValueError("solvers need at least one vertex")
    if kind is ParameterKind.GAMMA_TR2_NEAR:
        if vertex is None or not 0 <= vertex < g.n:
            raise ValueError("the near parameter needs a vertex of the graph")
        return vertex
    return -1


def _infeasible(g: Graph, kind: ParameterKind) -> bool:
    return kind.is_total and g.has_isolated_vertex()


def _search_order(g: Graph) -> list[int]:
    return sorted(g.vertices(), key=lambda v: (-g.degree(v), v))


def _min_value(g: Graph, kind: ParameterKind, v0: int, threads: int) -> tuple[int, int]:
    k = backend.kernel()
    adj = list(g.adj)
    order = _search_order(g)
    # all-ones is always feasible here, so n bounds the optimum
    upper = g.n
    if threads <= 1:
        return k.search_min(adj, g.n, kind.code, v0, order, upper)
    first = order[0]
    top = 1 if kind.is_set else 2

    def task(c: int) -> tuple[int, int]:
        return k.search_min(adj, g.n, kind.code, v0, order, upper, first, c)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(task, range(top + 1)))
    return min(p[0] for p in parts), sum(p[1] for p in parts)


@lru_cache(maxsize=8192)
def _solve(g: Graph, kind: ParameterKind, v0: int, backend_name: str, threads: int) -> SolveResult:
    vertex = v0 if v0 >= 0 else None
    if _infeasible(g, kind):
        return SolveResult(kind, None, None, 0, False, vertex)
    value, nodes = _min_value(g, kind, v0, threads)
    labels = backend.kernel().first_lex(list(g.adj), g.n, kind.code, v0, value)
    if labels is None:  # pragma: no cover - would mean the two passes disagree
        raise RuntimeError(f"{kind.name}: no witness at the optimum {value}")
    witness = Labeling(tuple(labels))
    _self_check(g, kind, vertex, value, witness)
    return SolveResult(kind, value, witness, nodes, True, vertex)


def _self_check(g: Graph, kind: ParameterKind, vertex: int | None, value: int, witness: Labeling) -> None:
    if witness.weight != value or not predicate(kind, vertex)(g, witness):
        raise RuntimeError(f"{kind.name}: witness {witness} failed the independent check")


def exact(
    g: Graph,
    kind: ParameterKind,
    vertex: int | None = None,
    *,
    limit: int = DEFAULT_LIMIT,
    threads: int = 1,
) -> SolveResult:
    """Exact minimum weight of ``kind`` on ``g`` with the lexicographically smallest witness.

    Graphs with an isolated vertex have no total-type labeling; they come
    back with ``feasible=False`` and no value.
    """
    v0 = _check_args(g, kind, vertex)
    if g.n > limit:
        raise SizeLimitError(f"exact solver limited to n <= {limit}, got {g.n}")
    return _solve(g, kind, v0, backend.current(), max(1, threads))


def brute_force(g: Graph, kind: ParameterKind, vertex: int | None = None, *, limit: int = ENUM_LIMIT) -> SolveResult:
    """Oracle: scan all 3^n (or 2^n) labelings; no bounds, no incremental state."""
    v0 = _check_args(g, kind, vertex)
    if g.n > limit:
        raise SizeLimitError(f"exhaustive scan limited to n <= {limit}, got {g.n}")
    vertex = v0 if v0 >= 0 else None
    value, labels = backend.kernel().brute_force(list(g.adj), g.n, kind.code, v0)
    if value < 0:
        return SolveResult(kind, None, None, 0, False, vertex)
    witness = Labeling(tuple(labels))
    _self_check(g, kind, vertex, value, witness)
    return SolveResult(kind, value, witness, 0, True, vertex)


@lru_cache(maxsize=4096)
def _all_optimal(g: Graph, kind: ParameterKind, v0: int, backend_name: str) -> tuple[Labeling, ...]:
    res = _solve(g, kind, v0, backend_name, 1)
    if not res.feasible:
        raise InfeasibleError(f"{kind.name} has no feasible labeling on a graph with an isolated vertex")
    found = backend.kernel().enumerate_all(list(g.adj), g.n, kind.code, v0, res.value)
    check = predicate(kind, res.vertex)
    out = []
    for labels in found:
        f = Labeling(tuple(labels))
        if f.weight != res.value or not check(g, f):  # pragma: no cover - kernel invariant
            raise RuntimeError(f"{kind.name}: enumerated {f} is not optimal")
        out.append(f)
    return tuple(out)


def all_optimal(
    g: Graph, kind: ParameterKind, vertex: int | None = None, *, limit: int = ENUM_LIMIT
) -> list[Labeling]:
    """Every optimal labeling of ``kind``, lexicographically sorted.

    The enumeration only cuts branches whose lower bound already exceeds the
    optimum, so no optimum can be lost.
    """
    v0 = _check_args(g, kind, vertex)
    if g.n > limit:
        raise SizeLimitError(f"optimal-set enumeration limited to n <= {limit}, got {g.n}")
    return list(_all_optimal(g, kind, v0, backend.current()))


def closed_form(kind: ParameterKind, family: str, n: int) -> int:
    """Known values on paths and cycles (``family`` is ``"path"`` or ``"cycle"``)."""
    if kind not in (ParameterKind.GAMMA_TR2, ParameterKind.GAMMA_X2):
        raise ValueError("closed forms exist for GAMMA_TR2 and GAMMA_X2 only")
    family = family.lower()
    if family == "path":
        if n < 2:
            raise ValueError("paths need n >= 2")
        base = 2 * math.ceil(n / 3)
        return base + 1 if n % 3 == 0 else base
    if family == "cycle":
        if n < 3:
            raise ValueError("cycles need n >= 3")
        return math.ceil(2 * n / 3)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class SpecialSets:
    S_tR2: frozenset[int]
    L_tR1: frozenset[int]
    S_1: frozenset[int]
    W_0: frozenset[int]


def special_vertex_sets(t: Graph, *, limit: int = ENUM_LIMIT) -> SpecialSets:
    """Vertex sets read off the complete optimal sets of TRDFs and TR2DFs."""
    classes = vertex_classes(t)
    tr = all_optimal(t, ParameterKind.GAMMA_TR, limit=limit)
    tr2 = all_optimal(t, ParameterKind.GAMMA_TR2, limit=limit)
    s_tr2 = frozenset(v for v in classes.supports if any(f[v] == 2 for f in tr))
    l_tr1 = frozenset(v for v in classes.leaves if any(f[v] == 1 for f in tr))
    s_1 = frozenset(v for v in classes.supports if all(f[v] == 1 for f in tr2))
    w_0 = frozenset(v for v in t.vertices() if all(f[v] == 0 for f in tr2))
    return SpecialSets(s_tr2, l_tr1, s_1, w_0)


def near_stable_vertices(g: Graph, *, limit: int = DEFAULT_LIMIT) -> frozenset[int]:
    base = exact(g, ParameterKind.GAMMA_TR2, limit=limit)
    if not base.feasible:
        return frozenset()
    return frozenset(
        v
        for v in g.vertices()
        if exact(g, ParameterKind.GAMMA_TR2_NEAR, v, limit=limit).value == base.value
    )


def clear_caches() -> None:
    _solve.cache_clear()
    _all_optimal.cache_clear()
