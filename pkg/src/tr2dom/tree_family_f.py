"""The tree family built from ``P_2`` by operations F1 to F7.

Operations append new vertices after the existing ones, so a certificate
(a list of operations with explicit vertex ids) replays exactly on the
representative it was recorded from.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .families import enumerate_trees, path, r_r
from .graph_core import Graph, NotATreeError, SizeLimitError, canonical_form, is_tree, vertex_classes
from .solvers import ParameterKind, exact, near_stable_vertices, special_vertex_sets

__all__ = [
    "OP_KINDS",
    "TreeOp",
    "FCertificate",
    "PreconditionError",
    "FamilyF",
    "applicable_targets",
    "apply_op",
    "generate_F",
    "check_characterization",
    "check_2gamma_t",
    "completeness_report",
]

OP_KINDS = ("F1", "F2", "F3", "F4", "F5", "F6", "F7")
GENERATE_LIMIT = 14


class PreconditionError(ValueError):
    """The target vertex is not in the set the operation requires."""


@dataclass(frozen=True, order=True)
class TreeOp:
    kind: str
    v: int
    r: int = 0

    def __post_init__(self) -> None:
        if self.kind not in OP_KINDS:
            raise ValueError(f"unknown operation {self.kind!r}")
        if self.kind == "F1" and self.r < 1:
            raise ValueError("F1 needs r >= 1")
        if self.kind != "F1" and self.r:
            raise ValueError(f"{self.kind} takes no r parameter")

    def added(self) -> int:
        return {"F1": 4 * self.r + 1, "F2": 1, "F3": 1, "F4": 2, "F5": 2, "F6": 2, "F7": 3}[self.kind]

    def to_json(self) -> dict:
        out = {"op": self.kind, "v": self.v}
        if self.kind == "F1":
            out["r"] = self.r
        return out


@dataclass(frozen=True)
class FCertificate:
    """Operations from ``P_2`` to a member, with the canonical form after each step."""

    steps: tuple[tuple[TreeOp, bytes], ...] = ()

    def extend(self, op: TreeOp, form: bytes) -> "FCertificate":
        return FCertificate(self.steps + ((op, form),))

    def replay(self, check: bool = True) -> Graph:
        t = path(2)
        for op, form in self.steps:
            t = apply_op(t, op, check=check)
            if canonical_form(t) != form:
                raise ValueError(f"replay diverged at {op}")
        return t

    def to_json(self) -> list[dict]:
        return [dict(op.to_json(), form=form.decode()) for op, form in self.steps]


# ---------------------------------------------------------------------------
# preconditions


@dataclass(frozen=True)
class _Targets:
    S_tR2: frozenset[int]
    S_1: frozenset[int]
    S_adj: frozenset[int]
    L_tR1: frozenset[int]
    F6: frozenset[int]
    W_0: frozenset[int]


@lru_cache(maxsize=None)
def _targets(t: Graph) -> _Targets:
    cls = vertex_classes(t)
    sets = special_vertex_sets(t)
    stable = near_stable_vertices(t)
    return _Targets(
        S_tR2=sets.S_tR2,
        S_1=sets.S_1,
        S_adj=cls.adjacent_supports,
        L_tR1=sets.L_tR1,
        F6=stable & (cls.leaves | cls.semi_supports),
        W_0=sets.W_0,
    )


_REQUIRED = {
    "F2": ("S_tR2", "S_tR2"),
    "F3": ("S_1", "S_1"),
    "F4": ("S_adj", "S_adj"),
    "F5": ("L_tR1", "L_tR1"),
    "F6": ("F6", "near stable vertices in L u SS"),
    "F7": ("W_0", "W_0"),
}


def applicable_targets(t: Graph, kind: str) -> frozenset[int]:
    """Vertices of ``t`` where operation ``kind`` may be applied."""
    if kind == "F1":
        return frozenset(t.vertices())
    return getattr(_targets(t), _REQUIRED[kind][0])


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError("expected a tree")


def apply_op(t: Graph, op: TreeOp, *, check: bool = True) -> Graph:
    """Apply ``op`` to ``t``; new vertices get ids ``t.n, t.n + 1, ...``."""
    _require_tree(t)
    if not 0 <= op.v < t.n:
        raise ValueError(f"vertex {op.v} not in a tree of order {t.n}")
    if check and op.kind != "F1":
        attr, label = _REQUIRED[op.kind]
        allowed = getattr(_targets(t), attr)
        if op.v not in allowed:
            raise PreconditionError(f"{op.kind}: vertex {op.v} not in {label} = {sorted(allowed)}")
    n, v = t.n, op.v
    if op.kind == "F1":
        rr = r_r(op.r)
        edges = [(a + n, b + n) for a, b in rr.edges()] + [(v, n)]
        return t.add_vertices(rr.n, edges)
    if op.kind in ("F2", "F3"):
        return t.add_vertices(1, [(v, n)])
    if op.kind in ("F4", "F6"):
        return t.add_vertices(2, [(v, n), (n, n + 1)])
    if op.kind == "F5":
        # the P_3 centre merges into leaf v, which keeps the two outer vertices
        return t.add_vertices(2, [(v, n), (v, n + 1)])
    return t.add_vertices(3, [(v, n), (n, n + 1), (n + 1, n + 2)])


def _ops_for(t: Graph, max_n: int) -> list[TreeOp]:
    room = max_n - t.n
    ops = []
    for r in range(1, (room - 1) // 4 + 1):
        ops += [TreeOp("F1", v, r) for v in t.vertices()]
    for kind in OP_KINDS[1:]:
        if TreeOp(kind, 0).added() > room:
            continue
        ops += [TreeOp(kind, v) for v in sorted(applicable_targets(t, kind))]
    return ops


# ---------------------------------------------------------------------------
# generation


@dataclass
class FamilyF:
    """Members of the family up to ``max_n``, keyed by canonical form."""

    max_n: int
    members: dict[bytes, Graph] = field(default_factory=dict)
    certificates: dict[bytes, FCertificate] = field(default_factory=dict)

    def __contains__(self, t: Graph) -> bool:
        return canonical_form(t) in self.members

    def of_order(self, n: int) -> set[bytes]:
        return {k for k, g in self.members.items() if g.n == n}

    def certificate(self, t: Graph) -> FCertificate | None:
        return self.certificates.get(canonical_form(t))


def generate_F(max_n: int) -> FamilyF:
    """Breadth-first closure of ``{P_2}`` under F1 to F7, orders up to ``max_n``."""
    if max_n > GENERATE_LIMIT:
        raise SizeLimitError(f"family generation limited to max_n <= {GENERATE_LIMIT}")
    return _generate(max_n)


@lru_cache(maxsize=8)
def _generate(max_n: int) -> FamilyF:
    fam = FamilyF(max_n)
    if max_n < 2:
        return fam
    start = path(2)
    key = canonical_form(start)
    fam.members[key] = start
    fam.certificates[key] = FCertificate()
    queue = deque([key])
    while queue:
        key = queue.popleft()
        t = fam.members[key]
        cert = fam.certificates[key]
        for op in _ops_for(t, max_n):
            child = apply_op(t, op, check=False)
            ck = canonical_form(child)
            if ck not in fam.members:
                fam.members[ck] = child
                fam.certificates[ck] = cert.extend(op, ck)
                queue.append(ck)
    return fam


# ---------------------------------------------------------------------------
# cross-checks


@dataclass(frozen=True)
class Characterization:
    equality: bool
    in_F: bool
    certificate: FCertificate | None
    gamma_tr2: int
    gamma_tr: int

    @property
    def agrees(self) -> bool:
        return self.equality == self.in_F


def check_characterization(t: Graph, *, limit: int = 12) -> Characterization:
    _require_tree(t)
    if t.n < 2:
        raise ValueError("the characterisation needs order >= 2")
    if t.n > limit:
        raise SizeLimitError(f"characterisation check limited to n <= {limit}")
    a = exact(t, ParameterKind.GAMMA_TR2).value
    b = exact(t, ParameterKind.GAMMA_TR).value
    fam = generate_F(t.n)
    cert = fam.certificate(t)
    return Characterization(a == b, cert is not None, cert, a, b)


@dataclass(frozen=True)
class TwoGammaT:
    equality_2t: bool
    equality_tr: bool
    gamma_eq: bool

    @property
    def holds(self) -> bool:
        return self.equality_2t == (self.equality_tr and self.gamma_eq)


def check_2gamma_t(t: Graph, *, limit: int = 12) -> TwoGammaT:
    _require_tree(t)
    if t.n > limit:
        raise SizeLimitError(f"check limited to n <= {limit}")
    v = {k: exact(t, k).value for k in (ParameterKind.GAMMA, ParameterKind.GAMMA_T, ParameterKind.GAMMA_TR, ParameterKind.GAMMA_TR2)}
    return TwoGammaT(
        v[ParameterKind.GAMMA_TR2] == 2 * v[ParameterKind.GAMMA_T],
        v[ParameterKind.GAMMA_TR2] == v[ParameterKind.GAMMA_TR],
        v[ParameterKind.GAMMA_T] == v[ParameterKind.GAMMA],
    )


@dataclass(frozen=True)
class CompletenessReport:
    max_n: int
    trees_checked: int
    equality_count: int
    members: int
    missing: tuple[bytes, ...]  # equality holds but not generated
    spurious: tuple[bytes, ...]  # generated but equality fails

    @property
    def ok(self) -> bool:
        return not self.missing and not self.spurious


def completeness_report(max_n: int) -> CompletenessReport:
    """Compare the generated family with all trees of order ``2..max_n``."""
    fam = generate_F(max_n)
    equal: set[bytes] = set()
    checked = 0
    for n in range(2, max_n + 1):
        for t in enumerate_trees(n):
            checked += 1
            if exact(t, ParameterKind.GAMMA_TR2).value == exact(t, ParameterKind.GAMMA_TR).value:
                equal.add(canonical_form(t))
    gen = set(fam.members)
    spurious = tuple(
        sorted(k for k in gen if exact(fam.members[k], ParameterKind.GAMMA_TR2).value != exact(fam.members[k], ParameterKind.GAMMA_TR).value)
    )
    return CompletenessReport(max_n, checked, len(equal), len(gen), tuple(sorted(equal - gen)), spurious)
