"""Immutable simple graphs over vertices ``0..n-1`` with bitset adjacency.

Every neighbourhood is stored as a Python ``int`` bitmask, so ``N(v) & S``
style tests are single machine operations for the graph sizes the solvers
handle.  Nothing here mutates a graph; constructions return new objects.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "RootedTree",
    "VertexClasses",
    "SizeLimitError",
    "NotATreeError",
    "Unreachable",
    "UNREACHABLE",
    "bits",
    "mask_of",
    "degree_stats",
    "vertex_classes",
    "distance",
    "diameter",
    "delete_vertices",
    "corona",
    "cartesian_product",
    "is_spanning_subgraph",
    "hamiltonian",
    "canonical_form",
    "root_at",
    "is_connected",
    "is_tree",
    "is_bipartite",
    "is_chordal",
    "universal_vertices",
    "relabel",
]


class SizeLimitError(ValueError):
    """Raised when an exponential routine is asked to exceed its vertex cap."""


class NotATreeError(ValueError):
    pass


class Unreachable:
    """Distance between two vertices in different components."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __bool__(self) -> bool:
        return False


UNREACHABLE = Unreachable()


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitmask of ``v``."""

    n: int
    adj: tuple[int, ...]
    _edges: tuple[tuple[int, int], ...] = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            es = tuple((u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))
            object.__setattr__(self, "_edges", es)
        return self._edges

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def has_isolated_vertex(self) -> bool:
        return any(nb == 0 for nb in self.adj)

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced by ``keep``; vertex ``keep[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def add_vertices(self, k: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """New graph with ``k`` extra vertices ``n..n+k-1`` and extra ``edges``."""
        return Graph.from_edges(self.n + k, list(self.edges()) + list(edges))

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


@dataclass(frozen=True)
class VertexClasses:
    leaves: frozenset[int]
    supports: frozenset[int]
    strong_supports: frozenset[int]
    strong_leaves: frozenset[int]
    semi_supports: frozenset[int]
    adjacent_supports: frozenset[int]
    universal: frozenset[int]


def degree_stats(g: Graph) -> tuple[int, int]:
    if g.n < 1:
        raise ValueError("degree extremes need at least one vertex")
    d = g.degrees()
    return min(d), max(d)


def universal_vertices(g: Graph) -> frozenset[int]:
    full = g.full_mask
    return frozenset(v for v in g.vertices() if g.closed(v) == full)


def vertex_classes(g: Graph) -> VertexClasses:
    leaf_mask = mask_of(v for v in g.vertices() if g.degree(v) == 1)
    support_mask = mask_of(v for v in g.vertices() if g.adj[v] & leaf_mask)
    strong = mask_of(v for v in bits(support_mask) if (g.adj[v] & leaf_mask).bit_count() >= 2)
    strong_leaves = mask_of(v for v in bits(leaf_mask) if g.adj[v] & strong)
    # semi-support: a non-leaf with a support neighbour
    semi = mask_of(v for v in g.vertices() if not leaf_mask >> v & 1 and g.adj[v] & support_mask)
    adjacent = mask_of(v for v in bits(support_mask) if g.adj[v] & support_mask)
    return VertexClasses(
        leaves=frozenset(bits(leaf_mask)),
        supports=frozenset(bits(support_mask)),
        strong_supports=frozenset(bits(strong)),
        strong_leaves=frozenset(bits(strong_leaves)),
        semi_supports=frozenset(bits(semi)),
        adjacent_supports=frozenset(bits(adjacent)),
        universal=universal_vertices(g),
    )


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in bits(nxt):
            dist[v] = d
        frontier = nxt
    return dist


def distance(g: Graph, u: int, v: int) -> int | Unreachable:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"vertex out of range for n={g.n}")
    d = _bfs(g, u)[v]
    return UNREACHABLE if d < 0 else d


def diameter(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("empty graph has no diameter")
    best = 0
    for v in g.vertices():
        dist = _bfs(g, v)
        if min(dist) < 0:
            raise ValueError("diameter of a disconnected graph is undefined")
        best = max(best, max(dist))
    return best


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return min(_bfs(g, 0)) >= 0


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G - S`` with contiguous relabelling; returns the graph and old->new map."""
    removed = set(s)
    for v in removed:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} not in graph")
    keep = [v for v in g.vertices() if v not in removed]
    return g.induced(keep), {v: i for i, v in enumerate(keep)}


def corona(g: Graph, h: Graph) -> Graph:
    """``G ⊙ H``: copy ``i`` of ``H`` occupies ``n + i*|H| ...`` and is joined to ``i``."""
    if g.n == 0:
        raise ValueError("corona needs a nonempty first factor")
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        edges.extend((base + a, base + b) for a, b in h.edges())
        edges.extend((i, base + a) for a in range(h.n))
    return Graph.from_edges(g.n * (1 + h.n), edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, b)`` is numbered ``a * |H| + b``."""
    if g.n == 0 or h.n == 0:
        raise ValueError("both factors must be nonempty")
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges():
            edges.append((a * h.n + b1, a * h.n + b2))
    for a1, a2 in g.edges():
        for b in range(h.n):
            edges.append((a1 * h.n + b, a2 * h.n + b))
    return Graph.from_edges(g.n * h.n, edges)


def is_spanning_subgraph(h: Graph, g: Graph, mapping: Sequence[int] | None = None) -> bool:
    """True iff every edge of ``h`` lands on an edge of ``g`` under ``mapping``."""
    if h.n != g.n:
        raise ValueError("spanning subgraph needs equal orders")
    if mapping is None:
        mapping = range(h.n)
    if sorted(mapping) != list(range(h.n)):
        raise ValueError("mapping is not a bijection")
    return all(g.has_edge(mapping[u], mapping[v]) for u, v in h.edges())


def hamiltonian(g: Graph, limit: int = 14) -> str:
    """Return ``"cycle"``, ``"path_only"`` or ``"none"`` by backtracking."""
    n = g.n
    if n > limit:
        raise SizeLimitError(f"hamiltonian search limited to n <= {limit}, got {n}")
    if n == 0:
        return "none"
    if n == 1:
        return "path_only"
    if not is_connected(g):
        return "none"
    full = g.full_mask
    found_path = False

    def extend(v: int, visited: int, start: int) -> bool:
        nonlocal found_path
        if visited == full:
            found_path = True
            return n >= 3 and g.has_edge(v, start)
        for u in bits(g.adj[v] & ~visited):
            if extend(u, visited | 1 << u, start):
                return True
        return False

    # a cycle passes through vertex 0, so anchoring there is enough for cycles
    if extend(0, 1, 0):
        return "cycle"
    if found_path:
        return "path_only"
    for s in range(1, n):
        if extend(s, 1 << s, s):
            return "cycle"
        if found_path:
            return "path_only"
    return "none"


# ---------------------------------------------------------------------------
# canonical forms


def _tree_centers(g: Graph) -> list[int]:
    degree = g.degrees()
    remaining = g.n
    layer = [v for v in g.vertices() if degree[v] <= 1]
    removed = 0
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed |= 1 << v
            for u in bits(g.adj[v] & ~removed):
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _ahu(g: Graph, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in bits(g.adj[v]):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[u] for u in bits(g.adj[v]) if u != parent[v])
        code[v] = "(" + "".join(kids) + ")"
    return code[root]


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition (isomorphism-invariant)."""
    n = g.n
    while True:
        sigs = []
        for v in range(n):
            counts = sorted(colors[u] for u in bits(g.adj[v]))
            sigs.append((colors[v], tuple(counts)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == len(set(colors)):
            return new
        colors = new


def _certificate(g: Graph, order: list[int]) -> str:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << (g.n - 1 - pos[u])
        rows.append(row)
    return ",".join(format(r, "x") for r in rows)


def _general_canonical(g: Graph) -> str:
    best: list[str] = []

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == g.n:
            order = sorted(range(g.n), key=colors.__getitem__)
            cert = _certificate(g, order)
            if not best or cert < best[0]:
                best[:] = [cert]
            return
        # first smallest non-singleton cell, chosen by colour so it is invariant
        target = min((len(vs), c) for c, vs in cells.items() if len(vs) > 1)[1]
        tried: list[int] = []
        for v in cells[target]:
            # twins in one cell give identical subtrees; branch on one of them
            if any((g.adj[v] & ~(1 << w)) == (g.adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
            search(split)

    search([0] * g.n)
    return best[0] if best else ""


def canonical_form(g: Graph, limit: int = 10) -> bytes:
    """Isomorphism-invariant byte string: equal iff the graphs are isomorphic.

    Trees (any order) use the AHU encoding rooted at the centre(s); other
    graphs use refinement plus individualisation and are capped at ``limit``.
    """
    if g.n >= 1 and is_tree(g):
        codes = sorted(_ahu(g, c) for c in _tree_centers(g))
        return ("T%d:" % g.n + codes[0]).encode()
    if g.n > limit:
        raise SizeLimitError(f"canonical form for non-trees limited to n <= {limit}, got {g.n}")
    return ("G%d:" % g.n + _general_canonical(g)).encode()


# ---------------------------------------------------------------------------
# rooted trees


@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int
    parent: dict[int, int]

    def children(self, v: int) -> list[int]:
        return [u for u in bits(self.tree.adj[v]) if self.parent.get(u) == v]

    def descendants(self, v: int) -> frozenset[int]:
        out: list[int] = []
        stack = self.children(v)
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.children(u))
        return frozenset(out)

    def maximal_subtree(self, v: int) -> tuple[Graph, list[int]]:
        """Tree induced by ``D[v]``; returns it with the old vertex ids in order."""
        keep = sorted(self.descendants(v) | {v})
        return self.tree.induced(keep), keep


def root_at(t: Graph, r: int) -> RootedTree:
    if not is_tree(t):
        raise NotATreeError("root_at needs a tree")
    if not 0 <= r < t.n:
        raise IndexError(f"root {r} out of range")
    parent: dict[int, int] = {}
    queue = deque([r])
    seen = 1 << r
    while queue:
        v = queue.popleft()
        for u in bits(t.adj[v] & ~seen):
            seen |= 1 << u
            parent[u] = v
            queue.append(u)
    return RootedTree(t, r, parent)


# ---------------------------------------------------------------------------
# recognition helpers used by the gadget checks


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in g.vertices():
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then verify the reverse order is a PEO."""
    n = g.n
    weight = [0] * n
    numbered = 0
    order: list[int] = []
    for _ in range(n):
        v = max((u for u in range(n) if not numbered >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered |= 1 << v
        for u in bits(g.adj[v] & ~numbered):
            weight[u] += 1
    # order is reverse of a perfect elimination ordering
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in bits(g.adj[v]) if pos[u] < pos[v]]
        if len(earlier) < 2:
            continue
        p = max(earlier, key=pos.__getitem__)
        rest = mask_of(u for u in earlier if u != p)
        if rest & ~g.adj[p]:
            return False
    return True

