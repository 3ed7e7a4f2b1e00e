"""Command-line front end.

Exit codes: 0 success, 1 a verified statement was violated, 2 bad input or
parameters, 3 no feasible labeling exists, 4 a size limit was hit.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Any, Sequence

from . import __version__
from .families import build, parse_family, random_graph
from .graph_core import Graph, SizeLimitError, NotATreeError
from .io import ParseError, emit, emit_graph6, read_graph
from .solvers import DEFAULT_LIMIT, STANDARD_KINDS, ParameterKind, exact
from .theorem_suite import CATALOG, check, normalize_id, summarize
from .tree_family_f import GENERATE_LIMIT, completeness_report, generate_F

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_SIZE = 0, 1, 2, 3, 4


class _Usage(Exception):
    pass


class _Infeasible(Exception):
    def __init__(self, report: dict) -> None:
        super().__init__("no feasible labeling")
        self.report = report


def _describe(g: Graph) -> dict:
    g6 = emit_graph6(g)
    return {"n": g.n, "m": g.m, "graph6": g6, "digest": hashlib.sha256(g6.encode()).hexdigest()[:16]}


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "family", None):
        base = read_graph(args.input) if args.input else None
        return build(parse_family(args.family, base))
    if not args.input:
        raise _Usage("an --input file or a --family spec is required")
    return read_graph(args.input)


def _report(command: str, g: Graph | None, results: Any, timing: dict, args: argparse.Namespace) -> str:
    rep: dict[str, Any] = {"tool": "tr2dom", "version": __version__, "command": command, "results": results}
    if g is not None:
        rep["input"] = _describe(g)
    if not args.no_timing:
        rep["timing"] = timing
    return json.dumps(rep, sort_keys=True, indent=2) + "\n"


def _write(text: str, args: argparse.Namespace) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def _parse_params(names: list[str]) -> list[ParameterKind]:
    kinds: list[ParameterKind] = []
    for name in names or ["all"]:
        for part in name.split(","):
            if part.strip().lower() == "all":
                kinds.extend(STANDARD_KINDS)
            else:
                kinds.append(ParameterKind.from_cli(part))
    return list(dict.fromkeys(kinds))


def cmd_compute(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    kinds = _parse_params(args.param)
    t0 = time.perf_counter()
    results, nodes, infeasible = {}, {}, False
    for kind in kinds:
        vertex = args.vertex if kind is ParameterKind.GAMMA_TR2_NEAR else None
        res = exact(g, kind, vertex, limit=args.limit, threads=args.threads)
        entry: dict[str, Any] = {"feasible": res.feasible, "value": res.value}
        if res.feasible:
            entry["witness"] = str(res.witness)
        else:
            infeasible = True
        if vertex is not None:
            entry["vertex"] = vertex
        results[kind.cli_name] = entry
        nodes[kind.cli_name] = res.nodes_explored
    timing = {"seconds": round(time.perf_counter() - t0, 6), "nodes_explored": nodes, "threads": args.threads}
    text = _report("compute", g, results, timing, args)
    _write(text, args)
    if infeasible:
        print("error: graph has an isolated vertex; total-type labelings do not exist", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.random is not None:
        if args.family:
            raise _Usage("--family and --random are mutually exclusive")
        g = random_graph(args.random, args.p, args.seed)
    elif args.family:
        g = _load_graph(args)
    else:
        raise _Usage("generate needs --family or --random")
    _write(emit(g, args.format), args)
    return EXIT_OK


def _check_ids(names: list[str]) -> list[str]:
    ids: list[str] = []
    for name in names or ["all"]:
        for part in name.split(","):
            ids.extend(CATALOG if part.strip().lower() == "all" else [normalize_id(part)])
    return list(dict.fromkeys(ids))


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    t0 = time.perf_counter()
    verdicts = [check(g, cid, limit=args.limit) for cid in _check_ids(args.check)]
    results = {"verdicts": [v.to_json() for v in verdicts], "summary": summarize(verdicts)}
    _write(_report("verify", g, results, {"seconds": round(time.perf_counter() - t0, 6)}, args), args)
    return EXIT_VIOLATION if results["summary"]["violated"] else EXIT_OK


def cmd_tree_family(args: argparse.Namespace) -> int:
    if args.max_n > GENERATE_LIMIT:
        raise SizeLimitError(f"--max-n is limited to {GENERATE_LIMIT}")
    if args.check_completeness and args.max_n > 12:
        raise SizeLimitError("--check-completeness is limited to --max-n 12")
    t0 = time.perf_counter()
    fam = generate_F(args.max_n)
    members = []
    for key in sorted(fam.members, key=lambda k: (fam.members[k].n, k)):
        t = fam.members[key]
        entry = {"order": t.n, "form": key.decode(), "graph6": emit_graph6(t)}
        if args.certificates:
            entry["certificate"] = fam.certificates[key].to_json()
        members.append(entry)
    results: dict[str, Any] = {"max_n": args.max_n, "count": len(members), "members": members}
    status = EXIT_OK
    if args.check_completeness:
        rep = completeness_report(args.max_n)
        results["completeness"] = {
            "trees_checked": rep.trees_checked,
            "equality_count": rep.equality_count,
            "missing": [k.decode() for k in rep.missing],
            "spurious": [k.decode() for k in rep.spurious],
            "agree": rep.ok,
        }
        if not rep.ok:
            status = EXIT_VIOLATION
    _write(_report("tree-family", None, results, {"seconds": round(time.perf_counter() - t0, 6)}, args), args)
    return status


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser, graph_input: bool = True) -> None:
    if graph_input:
        p.add_argument("--input", "-i", help="edge list or graph6 file")
        p.add_argument("--family", "-f", help="family spec such as hs:3, frn:5,8, reduction")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="solver workers")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="solver vertex cap")
    p.add_argument("--output", "-o", help="write to a file instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="omit the timing block")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tr2dom", description="Exact total Roman {2}-domination toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact parameter values with witnesses")
    _add_common(p)
    p.add_argument("--param", "-p", action="append", help="gamma, gamma-t, gamma-r2, gamma-tr, gamma-tr2, gamma-x2, gamma-tr2-near or all")
    p.add_argument("--vertex", type=int, help="vertex for gamma-tr2-near")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("generate", help="emit a named or random graph")
    _add_common(p)
    p.add_argument("--random", type=int, metavar="N", help="Erdős–Rényi graph of order N")
    p.add_argument("--p", type=float, default=0.5, help="edge probability for --random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run theorem checks")
    _add_common(p)
    p.add_argument("--check", "-c", action="append", help="check id (e.g. eq2, reduction-id) or all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tree-family", help="generate the operation-built tree family")
    _add_common(p, graph_input=False)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--check-completeness", action="store_true")
    p.add_argument("--certificates", action="store_true", help="include construction certificates")
    p.set_defaults(func=cmd_tree_family)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (ParseError, _Usage, NotATreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
