"""Compiled kernel versus the pure-Python fallback on the same workloads.

    python3 bench/benchmark.py [--repeat 3] [--json out.json]

Each workload runs from a cold cache on both backends; values must agree.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from tr2dom.families import figure1_graph, random_connected_graph, reduction_gadget, r_r
from tr2dom.solvers import STANDARD_KINDS, ParameterKind, available_backends, clear_caches, exact, set_backend

K = ParameterKind


def workloads():
    yield "figure1 all kinds", lambda: [exact(figure1_graph(), k).value for k in STANDARD_KINDS]
    g12 = random_connected_graph(12, 0.3, 1)
    yield "G(12,0.3) all kinds", lambda: [exact(g12, k).value for k in STANDARD_KINDS]
    yield "R_3 gamma-tr", lambda: [exact(r_r(3), K.GAMMA_TR).value]
    g20 = random_connected_graph(20, 0.2, 5)
    yield "G(20,0.2) all kinds", lambda: [exact(g20, k).value for k in STANDARD_KINDS]
    h = reduction_gadget(random_connected_graph(5, 0.5, 4))
    yield "H_G order 30 all kinds", lambda: [exact(h, k).value for k in STANDARD_KINDS]


def time_one(fn, repeat: int):
    times, value = [], None
    for _ in range(repeat):
        clear_caches()
        t0 = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), value


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="write raw timings here")
    args = ap.parse_args(argv)
    backends = available_backends()
    if "compiled" not in backends:
        print("compiled kernel not built; only the fallback can be timed", file=sys.stderr)
    rows = []
    for name, fn in workloads():
        row = {"workload": name}
        for b in backends:
            set_backend(b)
            row[b], row[b + "_value"] = time_one(fn, args.repeat)
        if len({tuple(row[b + "_value"]) for b in backends}) != 1:
            print(f"backends disagree on {name}: {row}", file=sys.stderr)
            return 1
        rows.append(row)
    set_backend(backends[0])
    print(f"{'workload':28s}" + "".join(f"{b:>12s}" for b in backends) + ("    speedup" if len(backends) == 2 else ""))
    for row in rows:
        line = f"{row['workload']:28s}" + "".join(f"{row[b]:11.4f}s" for b in backends)
        if len(backends) == 2:
            line += f"   {row['python'] / row['compiled']:8.1f}x"
        print(line)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
