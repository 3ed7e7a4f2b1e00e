"""Named graphs, the reduction gadget, and exhaustive small-graph enumeration."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from itertools import combinations, product

from .graph_core import (
    Graph,
    SizeLimitError,
    canonical_form,
    cartesian_product,
    corona,
    is_connected,
    universal_vertices,
)

__all__ = [
    "FamilySpec",
    "build",
    "parse_family",
    "path",
    "cycle",
    "complete",
    "empty",
    "star",
    "double_star",
    "h_s",
    "r_r",
    "f_rn",
    "reduction_gadget",
    "figure1_graph",
    "ladder",
    "family_H_witness",
    "enumerate_trees",
    "prufer_trees",
    "enumerate_connected_graphs",
    "random_graph",
    "random_connected_graph",
]


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph.from_edges(n, [])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    if n < 2:
        raise ValueError("star needs order >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def double_star(x: int, y: int) -> Graph:
    """Centres 0 and 1; centre 0 carries ``x`` leaves, centre 1 carries ``y``."""
    if not x >= y >= 1:
        raise ValueError("double star needs x >= y >= 1")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(x)]
    edges += [(1, 2 + x + i) for i in range(y)]
    return Graph.from_edges(2 + x + y, edges)


def h_s(s: int) -> Graph:
    """Hub 0 joined to the centre of ``s`` copies of ``P_3``; copy ``i`` is ``1+3i..3+3i``."""
    if s < 1:
        raise ValueError("H_s needs s >= 1")
    edges = []
    for i in range(s):
        c = 1 + 3 * i
        edges += [(0, c), (c, c + 1), (c, c + 2)]
    return Graph.from_edges(3 * s + 1, edges)


def r_r(r: int) -> Graph:
    """Hub 0 joined to a support of each of ``r`` copies of ``P_4``.

    Copy ``i`` is the path ``a-b-c-d`` with ``b = 1+4i`` (the support on the
    hub), ``a = b+1``, ``c = b+2``, ``d = b+3``.
    """
    if r < 1:
        raise ValueError("R_r needs r >= 1")
    edges = []
    for i in range(r):
        b = 1 + 4 * i
        edges += [(0, b), (b, b + 1), (b, b + 2), (b + 2, b + 3)]
    return Graph.from_edges(4 * r + 1, edges)


def f_rn(r: int, n: int) -> Graph:
    """Order-``n`` graph whose total Roman {2}-domination number is ``r``.

    Even ``r``: ``P_{r/2} ⊙ N_1`` with ``n - r`` pendants on path vertex 0.
    Odd ``r``: ``P_{(r-3)/2} ⊙ N_1`` with path vertex 0 joined to a leaf ``h``
    of a star ``K_{1, n-r+2}``.
    """
    if not 3 < r < n:
        raise ValueError("F_{r,n} needs 3 < r < n")
    if r % 2 == 0:
        base = corona(path(r // 2), empty(1))
        return base.add_vertices(n - r, [(0, r + i) for i in range(n - r)])
    base = corona(path((r - 3) // 2), empty(1))
    k = base.n
    centre, h = k, k + 1
    leaves = n - r + 2
    edges = [(centre, k + 1 + i) for i in range(leaves)] + [(0, h)]
    return base.add_vertices(leaves + 1, edges)


def reduction_gadget(g: Graph) -> Graph:
    """Attach a ``K_{1,4}`` to every vertex through one of its leaves.

    Vertex ``i`` of ``g`` keeps its index; its star has centre ``n + 5i`` and
    leaves ``n + 5i + 1 .. n + 5i + 4``, the first of which is joined to ``i``.
    """
    if g.has_isolated_vertex():
        raise ValueError("the reduction needs a base graph without isolated vertices")
    n = g.n
    edges = []
    for i in range(n):
        c = n + 5 * i
        edges += [(c, c + j) for j in range(1, 5)]
        edges.append((i, c + 1))
    return g.add_vertices(5 * n, edges)


def figure1_graph() -> Graph:
    """Spine ``0-1-2-3-4``; leaves 5, 6 on vertex 0 and 7, 8 on vertex 4."""
    return Graph.from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (0, 6), (4, 7), (4, 8)])


def ladder(a: int, b: int) -> Graph:
    """``P_a □ P_b``."""
    return cartesian_product(path(a), path(b))


# ---------------------------------------------------------------------------
# spec strings


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()
    base: Graph | None = None


_ARITY = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "empty": 1,
    "star": 1,
    "double-star": 2,
    "hs": 1,
    "rr": 1,
    "frn": 2,
    "ladder": 2,
    "figure1": 0,
    "reduction": 0,
}


def parse_family(text: str, base: Graph | None = None) -> FamilySpec:
    """Parse ``name[:p1,p2]`` such as ``hs:3`` or ``frn:5,8``."""
    m = re.fullmatch(r"\s*([a-z0-9-]+)\s*(?::\s*([0-9,\s]*))?", text.lower())
    if not m:
        raise ValueError(f"cannot parse family spec {text!r}")
    name = m.group(1)
    if name not in _ARITY:
        raise ValueError(f"unknown family {name!r}; known: {sorted(_ARITY)}")
    params = tuple(int(p) for p in (m.group(2) or "").replace(" ", "").split(",") if p)
    if len(params) != _ARITY[name]:
        raise ValueError(f"family {name!r} takes {_ARITY[name]} parameter(s), got {len(params)}")
    return FamilySpec(name, params, base)


def build(spec: FamilySpec | str, base: Graph | None = None) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec, base)
    p = spec.params
    name = spec.name
    if name == "reduction":
        if spec.base is None:
            raise ValueError("the reduction family needs a base graph")
        return reduction_gadget(spec.base)
    ctor = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "empty": empty,
        "star": star,
        "double-star": double_star,
        "hs": h_s,
        "rr": r_r,
        "frn": f_rn,
        "ladder": ladder,
        "figure1": figure1_graph,
    }[name]
    return ctor(*p)


# ---------------------------------------------------------------------------
# structural witness for the weight-3 characterisation


def family_H_witness(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Spanning star or spanning member of the triple family, found structurally.

    Returns ``("star", (centre,))`` when a universal vertex exists, else
    ``("triple", (a, b, c))`` for the first triple inducing ``P_3``/``C_3``
    that every other vertex sees at least twice, else ``None``.
    """
    if g.n < 3:
        return None
    uni = universal_vertices(g)
    if uni:
        return ("star", (min(uni),))
    for a, b, c in combinations(range(g.n), 3):
        inside = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c)
        if inside < 2:
            continue
        tri = (1 << a) | (1 << b) | (1 << c)
        if all((g.adj[x] & tri).bit_count() >= 2 for x in range(g.n) if not tri >> x & 1):
            return ("triple", (a, b, c))
    return None


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_trees(n: int, limit: int = 12) -> list[Graph]:
    """One tree per isomorphism class, grown leaf by leaf and deduplicated."""
    if n < 1:
        raise ValueError("trees need n >= 1")
    if n > limit:
        raise SizeLimitError(f"tree enumeration limited to n <= {limit}")
    level = {canonical_form(path(1)): path(1)}
    for k in range(1, n):
        nxt: dict[bytes, Graph] = {}
        for t in level.values():
            for v in range(k):
                child = t.add_vertices(1, [(v, k)])
                nxt.setdefault(canonical_form(child), child)
        level = nxt
    return [level[key] for key in sorted(level)]


def _prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def prufer_trees(n: int, limit: int = 8) -> list[Graph]:
    """Same classes as :func:`enumerate_trees`, via all ``n^(n-2)`` labelled trees."""
    if n > limit:
        raise SizeLimitError(f"Prüfer enumeration limited to n <= {limit}")
    if n <= 2:
        return [path(n)]
    seen: dict[bytes, Graph] = {}
    for seq in product(range(n), repeat=n - 2):
        t = _prufer_decode(seq, n)
        seen.setdefault(canonical_form(t), t)
    return [seen[key] for key in sorted(seen)]


def enumerate_connected_graphs(n: int, limit: int = 8) -> list[Graph]:
    """Connected graphs of order ``n`` up to isomorphism.

    Every connected graph has a vertex whose removal leaves it connected, so
    extending each order ``n-1`` class by one vertex with a nonempty
    neighbourhood reaches every class.
    """
    if n < 1:
        raise ValueError("graphs need n >= 1")
    if n > limit:
        raise SizeLimitError(f"connected-graph enumeration limited to n <= {limit}")
    level = {canonical_form(path(1)): path(1)}
    for k in range(1, n):
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for nbrs in range(1, 1 << k):
                child = g.add_vertices(1, [(v, k) for v in range(k) if nbrs >> v & 1])
                nxt.setdefault(canonical_form(child), child)
        level = nxt
    return [level[key] for key in sorted(level)]


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi ``G(n, p)`` drawn from ``random.Random(seed)``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, p: float, seed: int, attempts: int = 10_000) -> Graph:
    """First connected sample in the deterministic stream ``seed, seed+1, ...`` scaled apart."""
    for i in range(attempts):
        g = random_graph(n, p, seed * 7919 + i)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {attempts} attempts")
