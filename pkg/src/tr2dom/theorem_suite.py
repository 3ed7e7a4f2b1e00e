"""Machine-checkable forms of the bounds, equivalences and characterisations.

Each check computes both sides with the exact solvers and returns a
:class:`Verdict`.  Characterisations (EQ2, EQ3, EQN) compare the solver value
with a purely structural test so the two sides never share code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

from .families import family_H_witness, reduction_gadget
from .graph_core import Graph, SizeLimitError, degree_stats, hamiltonian, is_connected, universal_vertices, vertex_classes
from .labeling import Labeling, private_neighbors
from .solvers import DEFAULT_LIMIT, ENUM_LIMIT, ParameterKind, all_optimal, exact

__all__ = ["Verdict", "CATALOG", "EXTRA_CHECKS", "check", "run_all", "summarize", "normalize_id"]

K = ParameterKind


@dataclass(frozen=True)
class Verdict:
    check_id: str
    applicable: bool
    holds: bool
    lhs: Any = None
    rhs: Any = None
    witness: Any = None
    note: str = ""

    @property
    def status(self) -> str:
        if not self.applicable:
            return "vacuous"
        return "holds" if self.holds else "violated"

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "status": self.status,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "witness": _jsonable(self.witness),
            "note": self.note,
        }


def _jsonable(x: Any) -> Any:
    if isinstance(x, Labeling):
        return str(x)
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _vacuous(cid: str, why: str) -> Verdict:
    return Verdict(cid, False, True, note=why)


@dataclass
class _Ctx:
    """Lazily computed parameter values and witnesses for one graph."""

    g: Graph
    limit: int
    _res: dict = field(default_factory=dict)

    def res(self, kind: ParameterKind):
        if kind not in self._res:
            self._res[kind] = exact(self.g, kind, limit=self.limit)
        return self._res[kind]

    def val(self, kind: ParameterKind) -> int:
        return self.res(kind).value

    def wit(self, *kinds: ParameterKind) -> dict:
        return {k.cli_name: self.res(k).witness for k in kinds}


def _no_isolated(ctx: _Ctx) -> str | None:
    return "graph has an isolated vertex" if ctx.g.has_isolated_vertex() else None


def _connected_nontrivial(ctx: _Ctx) -> str | None:
    if ctx.g.n < 2 or not is_connected(ctx.g):
        return "needs a connected graph of order >= 2"
    return None


def _chain(cid: str, vals: list[int], names: list[str], ctx: _Ctx, kinds) -> Verdict:
    ok = all(a <= b for a, b in zip(vals, vals[1:]))
    return Verdict(cid, True, ok, dict(zip(names, vals)), "non-decreasing", None if ok else ctx.wit(*kinds))


def _chain_i(ctx: _Ctx) -> Verdict:
    t, tr2, tr = ctx.val(K.GAMMA_T), ctx.val(K.GAMMA_TR2), ctx.val(K.GAMMA_TR)
    return _chain("CHAIN_I", [t, tr2, tr, 2 * t], ["gamma_t", "gamma_tr2", "gamma_tr", "2gamma_t"], ctx, (K.GAMMA_T, K.GAMMA_TR2, K.GAMMA_TR))


def _chain_ii(ctx: _Ctx) -> Verdict:
    vals = [ctx.val(K.GAMMA_R2), ctx.val(K.GAMMA_TR2), ctx.val(K.GAMMA_X2)]
    return _chain("CHAIN_II", vals, ["gamma_r2", "gamma_tr2", "gamma_x2"], ctx, (K.GAMMA_R2, K.GAMMA_TR2, K.GAMMA_X2))


def _le(cid: str, lhs: int, rhs: int, ctx: _Ctx, kinds, **extra) -> Verdict:
    ok = lhs <= rhs
    return Verdict(cid, True, ok, lhs, rhs, None if ok else ctx.wit(*kinds), **extra)


def _iff(cid: str, left: bool, right: bool, witness: Any = None) -> Verdict:
    return Verdict(cid, True, left == right, left, right, witness)


def _equiv_t(ctx: _Ctx) -> Verdict:
    t = ctx.val(K.GAMMA_T)
    return _iff("EQUIV_T", ctx.val(K.GAMMA_TR2) == t, ctx.val(K.GAMMA_X2) == t, ctx.wit(K.GAMMA_T, K.GAMMA_TR2, K.GAMMA_X2))


def _sum_tg(ctx: _Ctx) -> Verdict:
    return _le("SUM_TG", ctx.val(K.GAMMA_TR2), ctx.val(K.GAMMA_T) + ctx.val(K.GAMMA), ctx, (K.GAMMA_TR2, K.GAMMA_T, K.GAMMA))


def _three_g(ctx: _Ctx) -> Verdict:
    return _le("THREE_G", ctx.val(K.GAMMA_TR2), 3 * ctx.val(K.GAMMA), ctx, (K.GAMMA_TR2, K.GAMMA))


def _two_gt_equiv(ctx: _Ctx) -> Verdict:
    tr2, t = ctx.val(K.GAMMA_TR2), ctx.val(K.GAMMA_T)
    right = tr2 == ctx.val(K.GAMMA_TR) and t == ctx.val(K.GAMMA)
    return _iff("TWO_GT_EQUIV", tr2 == 2 * t, right, ctx.wit(K.GAMMA, K.GAMMA_T, K.GAMMA_TR, K.GAMMA_TR2))


def _tr2g_lower(ctx: _Ctx) -> Verdict:
    return _le("TR2G_LOWER", 2 * ctx.val(K.GAMMA), ctx.val(K.GAMMA_TR), ctx, (K.GAMMA, K.GAMMA_TR))


def _sum_r2g(ctx: _Ctx) -> Verdict:
    tr2, r2, g = ctx.val(K.GAMMA_TR2), ctx.val(K.GAMMA_R2), ctx.val(K.GAMMA)
    # the bound tightens by one when gamma_r2 > gamma
    bounds = {"r2_plus_gamma": r2 + g, "two_r2": 2 * r2}
    if r2 > g:
        bounds["two_r2_minus_one"] = 2 * r2 - 1
    ok = all(tr2 <= b for b in bounds.values())
    return Verdict("SUM_R2G", True, ok, tr2, bounds, None if ok else ctx.wit(K.GAMMA_TR2, K.GAMMA_R2, K.GAMMA))


def _half_n(ctx: _Ctx) -> Verdict:
    if degree_stats(ctx.g)[0] < 2:
        return _vacuous("HALF_N", "minimum degree below 2")
    return _le("HALF_N", ctx.val(K.GAMMA_TR2), (ctx.val(K.GAMMA_T) + ctx.g.n) // 2, ctx, (K.GAMMA_TR2, K.GAMMA_T))


def _three_quarter(ctx: _Ctx) -> Verdict:
    if degree_stats(ctx.g)[0] < 3:
        return _vacuous("THREE_QUARTER", "minimum degree below 3")
    # integer form of gamma_tr2 <= 3n/4
    tr2 = ctx.val(K.GAMMA_TR2)
    ok = 4 * tr2 <= 3 * ctx.g.n
    return Verdict("THREE_QUARTER", True, ok, tr2, 3 * ctx.g.n / 4, None if ok else ctx.wit(K.GAMMA_TR2))


def _hamilton(ctx: _Ctx) -> Verdict:
    kind = hamiltonian(ctx.g)
    if kind == "none":
        return _vacuous("HAMILTON", "no hamiltonian path")
    bound = 2 * math.ceil(ctx.g.n / 3) + (0 if kind == "cycle" else 1)
    return _le("HAMILTON", ctx.val(K.GAMMA_TR2), bound, ctx, (K.GAMMA_TR2,), note=kind)


def _eq2(ctx: _Ctx) -> Verdict:
    uni = universal_vertices(ctx.g)
    return _iff("EQ2", ctx.val(K.GAMMA_TR2) == 2, len(uni) >= 2, {"universal": uni})


def _eqn_structure(g: Graph) -> bool:
    """P_3, or a corona H o N_1: every vertex a leaf or support, no strong support."""
    if g.n == 3 and g.m == 2:
        return True
    cls = vertex_classes(g)
    return (cls.leaves | cls.supports) == frozenset(g.vertices()) and not cls.strong_supports


def _eq3(ctx: _Ctx) -> Verdict:
    wit = family_H_witness(ctx.g)
    right = wit is not None and len(universal_vertices(ctx.g)) <= 1
    return _iff("EQ3", ctx.val(K.GAMMA_TR2) == 3, right, wit)


def _eqn(ctx: _Ctx) -> Verdict:
    return _iff("EQN", ctx.val(K.GAMMA_TR2) == ctx.g.n, _eqn_structure(ctx.g), ctx.wit(K.GAMMA_TR2))


def _needs_enum(ctx: _Ctx) -> str | None:
    return f"enumeration of optima limited to n <= {ENUM_LIMIT}" if ctx.g.n > ENUM_LIMIT else None


def _vo1_equiv(ctx: _Ctx) -> Verdict:
    opt = all_optimal(ctx.g, K.GAMMA_TR2)
    hit = next((f for f in opt if not f.v01(ctx.g)), None)
    return _iff("VO1_EQUIV", ctx.val(K.GAMMA_TR2) == ctx.val(K.GAMMA_TR), hit is not None, hit)


def _reduction_id(ctx: _Ctx) -> Verdict:
    if 6 * ctx.g.n > ctx.limit:
        return _vacuous("REDUCTION_ID", f"gadget of order {6 * ctx.g.n} exceeds the solver limit {ctx.limit}")
    h = reduction_gadget(ctx.g)
    res = exact(h, K.GAMMA_TR2, limit=ctx.limit)
    rhs = ctx.val(K.GAMMA) + 3 * ctx.g.n
    return Verdict("REDUCTION_ID", True, res.value == rhs, res.value, rhs, {"gadget_witness": res.witness})


# -- statements outside the main catalog, used by the property suites -------


def _delta2(ctx: _Ctx) -> Verdict:
    if degree_stats(ctx.g)[1] > 2:
        return _vacuous("DELTA2_X2", "maximum degree above 2")
    tr2, x2 = ctx.val(K.GAMMA_TR2), ctx.val(K.GAMMA_X2)
    return Verdict("DELTA2_X2", True, tr2 == x2, tr2, x2, None if tr2 == x2 else ctx.wit(K.GAMMA_TR2, K.GAMMA_X2))


def _private(ctx: _Ctx) -> Verdict:
    g = ctx.g
    opt = all_optimal(g, K.GAMMA_TR2)

    def good(f: Labeling) -> bool:
        pos = f.positive_mask
        return all(len(private_neighbors(g, v, _members(pos))[1]) >= 2 for v in f.part(2))

    hit = next((f for f in opt if good(f)), None)
    return Verdict("PRIVATE_NEIGHBORS", True, hit is not None, len(opt), None, hit if hit is not None else opt)


def _members(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _support_adj(ctx: _Ctx) -> Verdict:
    g = ctx.g
    if g.n < 3:
        return _vacuous("SUPPORT_ADJ", "order below 3")
    cls = vertex_classes(g)
    pairs = [(v, w) for v, w in g.edges() if v in cls.supports and w in cls.supports]
    if not pairs:
        return _vacuous("SUPPORT_ADJ", "no adjacent support vertices")
    opt = all_optimal(g, K.GAMMA_TR2)
    bad = [(v, w) for v, w in pairs if not any(f[v] == 2 and f[w] == 2 for f in opt)]
    return Verdict("SUPPORT_ADJ", True, not bad, len(pairs), None, bad or None)


def _is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and degree_stats(g)[1] == g.n - 1


def _strong_support(ctx: _Ctx) -> Verdict:
    g = ctx.g
    cls = vertex_classes(g)
    if _is_star(g) or not cls.strong_supports:
        return _vacuous("STRONG_SUPPORT", "star or no strong support")
    bad = []
    for kind in (K.GAMMA_TR2, K.GAMMA_TR):
        opt = all_optimal(g, kind)
        for v in sorted(cls.strong_supports):
            leaves = set(g.neighbors(v)) & cls.leaves
            if not any(f[v] == 2 and all(f[h] == 0 for h in leaves) for f in opt):
                bad.append((kind.cli_name, v))
    return Verdict("STRONG_SUPPORT", True, not bad, len(cls.strong_supports), None, bad or None)


def _super_strong(ctx: _Ctx) -> Verdict:
    g = ctx.g
    cls = vertex_classes(g)
    heavy = [v for v in sorted(cls.strong_supports) if len(set(g.neighbors(v)) & cls.leaves) >= 3]
    if _is_star(g) or not heavy:
        return _vacuous("SUPER_STRONG", "star or no support with three leaves")
    opt = all_optimal(g, K.GAMMA_TR2)
    bad = [(v, str(f)) for v in heavy for f in opt if f[v] != 2]
    return Verdict("SUPER_STRONG", True, not bad, heavy, None, bad or None)


Check = tuple[Callable[[_Ctx], Verdict], tuple[Callable[[_Ctx], str | None], ...]]

CATALOG: dict[str, Check] = {
    "CHAIN_I": (_chain_i, (_no_isolated,)),
    "CHAIN_II": (_chain_ii, (_no_isolated,)),
    "EQUIV_T": (_equiv_t, (_no_isolated,)),
    "SUM_TG": (_sum_tg, (_no_isolated,)),
    "THREE_G": (_three_g, (_no_isolated,)),
    "TWO_GT_EQUIV": (_two_gt_equiv, (_no_isolated,)),
    "TR2G_LOWER": (_tr2g_lower, (_no_isolated,)),
    "SUM_R2G": (_sum_r2g, (_no_isolated,)),
    "HALF_N": (_half_n, (_no_isolated,)),
    "THREE_QUARTER": (_three_quarter, (_no_isolated,)),
    "HAMILTON": (_hamilton, (_no_isolated,)),
    "EQ2": (_eq2, (_no_isolated,)),
    "EQ3": (_eq3, (_connected_nontrivial,)),
    "EQN": (_eqn, (_connected_nontrivial,)),
    "VO1_EQUIV": (_vo1_equiv, (_no_isolated, _needs_enum)),
    "REDUCTION_ID": (_reduction_id, (_no_isolated,)),
}

EXTRA_CHECKS: dict[str, Check] = {
    "DELTA2_X2": (_delta2, (_no_isolated,)),
    "PRIVATE_NEIGHBORS": (_private, (_no_isolated, _needs_enum)),
    "SUPPORT_ADJ": (_support_adj, (_connected_nontrivial, _needs_enum)),
    "STRONG_SUPPORT": (_strong_support, (_connected_nontrivial, _needs_enum)),
    "SUPER_STRONG": (_super_strong, (_no_isolated, _needs_enum)),
}

_ALL = {**CATALOG, **EXTRA_CHECKS}


def normalize_id(name: str) -> str:
    key = name.strip().upper().replace("-", "_")
    if key not in _ALL:
        raise ValueError(f"unknown check {name!r}; known: {sorted(_ALL)}")
    return key


def check(g: Graph, check_id: str, *, limit: int = DEFAULT_LIMIT, _ctx: _Ctx | None = None) -> Verdict:
    cid = normalize_id(check_id)
    if g.n > limit:
        raise SizeLimitError(f"checks limited to n <= {limit}, got {g.n}")
    ctx = _ctx if _ctx is not None else _Ctx(g, limit)
    fn, hyps = _ALL[cid]
    for hyp in hyps:
        why = hyp(ctx)
        if why:
            return _vacuous(cid, why)
    return fn(ctx)


def run_all(g: Graph, *, limit: int = DEFAULT_LIMIT, extras: bool = False) -> list[Verdict]:
    """Every catalog check (plus the extra statements if asked) on ``g``."""
    ctx = _Ctx(g, limit)
    ids = list(CATALOG) + (list(EXTRA_CHECKS) if extras else [])
    return [check(g, cid, limit=limit, _ctx=ctx) for cid in ids]


def summarize(verdicts: list[Verdict]) -> dict[str, int]:
    out = {"holds": 0, "vacuous": 0, "violated": 0}
    for v in verdicts:
        out[v.status] += 1
    return out
