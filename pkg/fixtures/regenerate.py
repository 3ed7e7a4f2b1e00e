"""Rewrite the edge-list fixtures from the package constructors.

Run ``python3 fixtures/regenerate.py`` from the repository root; the test
suite checks the committed files against this output.
"""

from __future__ import annotations

import sys
from pathlib import Path

from tr2dom.families import complete, cycle, empty, figure1_graph, h_s, ladder, path, r_r, reduction_gadget
from tr2dom.graph_core import Graph
from tr2dom.io import emit_edgelist

HERE = Path(__file__).resolve().parent


def k4_minus_edge() -> Graph:
    return Graph.from_edges(4, [e for e in complete(4).edges() if e != (2, 3)])


FIXTURES = {
    "figure1_spider.el": ("spider with spine 0-1-2-3-4 and two leaves at each end", figure1_graph),
    "figure2_h3.el": ("hub 0 joined to the centres of three P_3 copies", lambda: h_s(3)),
    "figure3_r3.el": ("hub 0 joined to a support of three P_4 copies", lambda: r_r(3)),
    "figure4_reduction_k4_minus_edge.el": ("K_4 minus edge 2-3 with a K_{1,4} hung from each vertex", lambda: reduction_gadget(k4_minus_edge())),
    "k4_minus_edge.el": ("base graph of the previous fixture", k4_minus_edge),
    "k2.el": ("single edge", lambda: path(2)),
    "c5.el": ("5-cycle", lambda: cycle(5)),
    "c4.el": ("4-cycle", lambda: cycle(4)),
    "p2_box_p3.el": ("Cartesian product P_2 x P_3, vertex (a, b) is 3a + b", lambda: ladder(2, 3)),
    "with_isolated.el": ("P_3 plus an isolated vertex", lambda: path(3).add_vertices(1, [])),
    "n3_empty.el": ("three isolated vertices", lambda: empty(3)),
}


def render(name: str) -> str:
    desc, ctor = FIXTURES[name]
    return f"# {desc}\n" + emit_edgelist(ctor())


def main() -> int:
    for name in sorted(FIXTURES):
        (HERE / name).write_text(render(name))
        print(f"wrote {name}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
