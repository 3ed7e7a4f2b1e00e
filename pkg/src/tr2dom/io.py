"""Edge-list and graph6 reading and writing."""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .graph_core import Graph

__all__ = ["ParseError", "parse_edgelist", "emit_edgelist", "parse_graph6", "emit_graph6", "parse_graph", "read_graph", "emit"]


class ParseError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def parse_edgelist(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u v`` with 0-based ids; ``#`` starts a comment."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty edge list")

    def ints(no: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: expected two integers, got {line!r}") from None

    n, m = ints(*lines[0])
    if n < 0 or m < 0:
        raise ParseError("negative order or size")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for no, line in body:
        u, v = ints(no, line)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {no}: vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(f"line {no}: loop at {u}")
        edges.append((u, v))
    if len({frozenset(e) for e in edges}) != len(edges):
        raise ParseError("repeated edge")
    return Graph.from_edges(n, edges)


def emit_edgelist(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def parse_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii", errors="replace")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise ParseError(f"bad graph6 string: {exc}") from None
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def emit_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def parse_graph(text: str) -> Graph:
    """Edge list if the first content line holds two integers, graph6 otherwise."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    first = lines[0][1].split()
    if len(first) == 2 and all(p.lstrip("-").isdigit() for p in first):
        return parse_edgelist(text)
    if len(lines) != 1:
        raise ParseError("graph6 input must hold exactly one graph")
    return parse_graph6(lines[0][1])


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def emit(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "edgelist":
        return emit_edgelist(g)
    raise ValueError(f"unknown format {fmt!r}")
