"""{0,1,2}-labelings of a graph and the domination predicates over them.

These predicates are written straight from the definitions, one vertex at a
time, and are deliberately independent of the bitset search kernels: every
solver result is re-checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph_core import Graph, bits, mask_of

__all__ = [
    "Labeling",
    "weight",
    "weight_on",
    "is_DF",
    "is_TDF",
    "is_R2DF",
    "is_TRDF",
    "is_TR2DF",
    "is_near_TR2DF",
    "is_double_dominating_set",
    "is_dominating_set",
    "is_total_dominating_set",
    "private_neighbors",
    "indicator",
]


@dataclass(frozen=True)
class Labeling:
    values: tuple[int, ...]
    _parts: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        for x in values:
            if x not in (0, 1, 2):
                raise ValueError(f"label {x!r} is not in {{0, 1, 2}}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Labeling":
        return cls(tuple(values))

    @property
    def graph_size(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __lt__(self, other: "Labeling") -> bool:
        return self.values < other.values

    def _mask(self, label: int) -> int:
        cached = self._parts.get(label)
        if cached is None:
            cached = mask_of(v for v, x in enumerate(self.values) if x == label)
            self._parts[label] = cached
        return cached

    def part(self, label: int) -> frozenset[int]:
        """``V_label``."""
        return frozenset(bits(self._mask(label)))

    @property
    def positive_mask(self) -> int:
        return self._mask(1) | self._mask(2)

    def v02(self, g: Graph) -> frozenset[int]:
        twos = self._mask(2)
        return frozenset(v for v in bits(self._mask(0)) if g.adj[v] & twos)

    def v01(self, g: Graph) -> frozenset[int]:
        return self.part(0) - self.v02(g)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def __str__(self) -> str:
        return "".join(map(str, self.values))


def indicator(n: int, s: Iterable[int]) -> Labeling:
    chosen = set(s)
    return Labeling(tuple(1 if v in chosen else 0 for v in range(n)))


def weight(f: Labeling) -> int:
    return sum(f.values)


def weight_on(f: Labeling, s: Iterable[int]) -> int:
    return sum(f.values[v] for v in s)


def _check_size(g: Graph, f: Labeling) -> None:
    if len(f) != g.n:
        raise ValueError(f"labeling has {len(f)} entries for a graph of order {g.n}")


def _nsum(g: Graph, f: Labeling, v: int) -> int:
    return sum(f.values[u] for u in bits(g.adj[v]))


def _total(g: Graph, f: Labeling) -> bool:
    # every positive vertex needs a positive neighbour
    return all(_nsum(g, f, v) > 0 for v in range(g.n) if f.values[v] > 0)


def is_DF(g: Graph, f: Labeling) -> bool:
    _check_size(g, f)
    return all(_nsum(g, f, v) > 0 for v in range(g.n) if f.values[v] == 0)


def is_TDF(g: Graph, f: Labeling) -> bool:
    _check_size(g, f)
    return all(_nsum(g, f, v) > 0 for v in range(g.n))


def is_R2DF(g: Graph, f: Labeling) -> bool:
    _check_size(g, f)
    return all(_nsum(g, f, v) >= 2 for v in range(g.n) if f.values[v] == 0)


def is_TRDF(g: Graph, f: Labeling) -> bool:
    _check_size(g, f)
    for v in range(g.n):
        if f.values[v] == 0 and not any(f.values[u] == 2 for u in bits(g.adj[v])):
            return False
    return _total(g, f)


def is_TR2DF(g: Graph, f: Labeling) -> bool:
    return is_R2DF(g, f) and _total(g, f)


def is_near_TR2DF(g: Graph, f: Labeling, v: int) -> bool:
    """Near-TR2DF relative to ``v``: only ``v`` may settle for a neighbour sum of 1."""
    _check_size(g, f)
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    for u in range(g.n):
        if f.values[u] == 0 and _nsum(g, f, u) < (1 if u == v else 2):
            return False
    return _total(g, f)


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(g.closed(v) & m for v in range(g.n))


def is_total_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(g.adj[v] & m for v in range(g.n))


def is_double_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all((g.closed(v) & m).bit_count() >= 2 for v in range(g.n))


def private_neighbors(g: Graph, v: int, s: Sequence[int] | Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``(pn(v, S), epn(v, S))``."""
    m = mask_of(s)
    if not m >> v & 1:
        raise ValueError(f"vertex {v} is not in the set")
    pn = frozenset(u for u in range(g.n) if g.adj[u] & m == 1 << v)
    return pn, frozenset(u for u in pn if not m >> u & 1)
