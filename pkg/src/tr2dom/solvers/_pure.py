"""Pure-Python search kernels.

Same algorithms and the same call signatures as the compiled ``_kernel``
module; selected automatically when the extension is not built.  Graphs
arrive as a list of neighbour bitmasks.

Kind codes: 0 dominating, 1 total dominating, 2 Roman {2}, 3 total Roman,
4 total Roman {2}, 5 double dominating, 6 near total Roman {2} (``v0``).
"""

from __future__ import annotations

import sys
from itertools import product

GAMMA, GAMMA_T, GAMMA_R2, GAMMA_TR, GAMMA_TR2, GAMMA_X2, NEAR = range(7)
SET_KINDS = (GAMMA, GAMMA_T, GAMMA_X2)


def max_label(kind: int) -> int:
    return 1 if kind in SET_KINDS else 2


def _popcount(x: int) -> int:
    return x.bit_count()


class _Search:
    """Incremental labelling state shared by the three DFS drivers."""

    def __init__(self, adj, n, kind, v0):
        self.adj = list(adj)
        self.n = n
        self.kind = kind
        self.v0 = v0
        self.top = max_label(kind)
        self.closed_pool = kind not in (GAMMA_T,)
        self.val = [-1] * n
        self.assigned = 0
        self.pos = 0  # label >= 1
        self.two = 0  # label == 2
        self.weight = 0
        self.nodes = 0

    # -- per-vertex feasibility -------------------------------------------------

    def _ok_value(self, x, c, S, P, T, U):
        k = self.kind
        if k == GAMMA:
            return c > 0 or P + U >= 1
        if k == GAMMA_T:
            return P + U >= 1
        if k == GAMMA_R2:
            return c > 0 or S + 2 * U >= 2
        if k == GAMMA_TR:
            return T + U >= 1 if c == 0 else P + U >= 1
        if k == GAMMA_X2:
            return P + U >= 2 if c == 0 else P + U >= 1
        if c == 0:
            need = 1 if (k == NEAR and x == self.v0) else 2
            return S + 2 * U >= need
        return P + U >= 1

    def _ok(self, x):
        a = self.adj[x]
        P = _popcount(a & self.pos)
        T = _popcount(a & self.two)
        S = P + T
        U = _popcount(a & ~self.assigned)
        c = self.val[x]
        if c >= 0:
            return self._ok_value(x, c, S, P, T, U)
        for c in range(self.top + 1):
            if self._ok_value(x, c, S, P, T, U):
                return True
        return False

    # -- lower bound on the weight still to be placed --------------------------

    def _residual(self, x, S, P, T):
        """(units still needed around x, weight of a unit placed on x itself)."""
        k = self.kind
        c = self.val[x]
        if k == GAMMA:
            if c > 0:
                return 0, 0
            return (0 if P else 1), (1 if c < 0 else 0)
        if k == GAMMA_T:
            return (0 if P else 1), 0
        if k == GAMMA_R2:
            if c > 0:
                return 0, 0
            return max(0, 2 - S), (2 if c < 0 else 0)
        if k == GAMMA_X2:
            if c >= 0:
                return max(0, 2 - c - P), 0
            return max(0, 2 - P), 1
        if c > 0:
            return (0 if P else 1), 0
        if k == GAMMA_TR:
            if c == 0:
                return (0 if T else 2), 0
            return max(0, 2 - S), 1
        need = 1 if (k == NEAR and x == self.v0) else 2
        return max(0, need - S), (0 if c == 0 else 1)

    def lower_bound(self):
        n = self.n
        free = ~self.assigned & ((1 << n) - 1)
        resid = [0] * n
        pools = [0] * n
        selfw = [0] * n
        total = 0
        for x in range(n):
            a = self.adj[x]
            P = _popcount(a & self.pos)
            T = _popcount(a & self.two)
            r, sw = self._residual(x, P + T, P, T)
            if r:
                resid[x] = r
                selfw[x] = sw
                pools[x] = (a & free) | ((1 << x) if sw else 0)
                total += r
        if total == 0:
            return 0
        # packing: needy vertices with pairwise disjoint pools need separate units
        used = 0
        pack = 0
        for want in (2, 1):
            for x in range(n):
                if resid[x] == want and not pools[x] & used:
                    used |= pools[x]
                    pack += 1 if (selfw[x] == 2) else resid[x]
        # fractional coverage: each unit on u covers at most cov[u] residual
        covs = []
        for u in range(n):
            if not free >> u & 1:
                continue
            cov = 0
            for x in range(n):
                if resid[x] and pools[x] >> u & 1:
                    cov += min(resid[x], selfw[x]) if x == u else 1
            if cov:
                covs.append(cov)
        covs.sort(reverse=True)
        units = 0
        got = 0
        for cov in covs:
            for _ in range(self.top):
                if got >= total:
                    break
                got += cov
                units += 1
        if got < total:
            return n * 2 + 1
        return max(units, pack)

    # -- assignment -----------------------------------------------------------

    def assign(self, v, c):
        self.val[v] = c
        bit = 1 << v
        self.assigned |= bit
        if c:
            self.pos |= bit
            if c == 2:
                self.two |= bit
        self.weight += c
        x = v
        if not self._ok(x):
            return False
        for x in _bits(self.adj[v]):
            if not self._ok(x):
                return False
        return True

    def unassign(self, v):
        c = self.val[v]
        bit = 1 << v
        self.val[v] = -1
        self.assigned &= ~bit
        self.pos &= ~bit
        self.two &= ~bit
        self.weight -= c


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _ensure_depth(n):
    if sys.getrecursionlimit() < 200 + 4 * n:
        sys.setrecursionlimit(200 + 4 * n)


def search_min(adj, n, kind, v0, order, upper, fixed_vertex=-1, fixed_value=0):
    """Minimum weight strictly below ``upper`` (or ``upper`` itself if none).

    ``fixed_vertex``/``fixed_value`` pin one vertex before the search; it is
    how the caller splits work across workers.  Returns ``(best, nodes)``.
    """
    _ensure_depth(n)
    st = _Search(adj, n, kind, v0)
    best = [upper]
    order = [v for v in order if v != fixed_vertex]
    if fixed_vertex >= 0:
        if not st.assign(fixed_vertex, fixed_value):
            return upper, 1
    top = st.top

    def dfs(d):
        st.nodes += 1
        if d == len(order):
            if st.weight < best[0]:
                best[0] = st.weight
            return
        v = order[d]
        for c in range(top + 1):
            if st.assign(v, c):
                if st.weight + st.lower_bound() < best[0]:
                    dfs(d + 1)
            st.unassign(v)

    if st.weight + st.lower_bound() < best[0]:
        dfs(0)
    return best[0], st.nodes


def _lex_dfs(adj, n, kind, v0, target, collect):
    _ensure_depth(n)
    st = _Search(adj, n, kind, v0)
    out = []
    top = st.top

    def dfs(d):
        st.nodes += 1
        if d == n:
            out.append(tuple(st.val))
            return not collect
        for c in range(top + 1):
            if st.assign(d, c) and st.weight + st.lower_bound() <= target:
                if dfs(d + 1):
                    st.unassign(d)
                    return True
            st.unassign(d)
        return False

    if st.lower_bound() <= target:
        dfs(0)
    return out


def first_lex(adj, n, kind, v0, target):
    """Lexicographically smallest feasible labelling of weight <= target, or None."""
    found = _lex_dfs(adj, n, kind, v0, target, collect=False)
    return found[0] if found else None


def enumerate_all(adj, n, kind, v0, target):
    """Every feasible labelling of weight <= target, in lexicographic order."""
    return _lex_dfs(adj, n, kind, v0, target, collect=True)


# ---------------------------------------------------------------------------
# exhaustive oracle: no incremental state, no bounds


def feasible_masks(adj, n, kind, v0, pos, two):
    """Direct definition check of a labelling given as (positive, two) masks."""
    for x in range(n):
        a = adj[x]
        P = _popcount(a & pos)
        S = P + _popcount(a & two)
        zero = not pos >> x & 1
        if kind == GAMMA:
            if zero and P == 0:
                return False
        elif kind == GAMMA_T:
            if P == 0:
                return False
        elif kind == GAMMA_R2:
            if zero and S < 2:
                return False
        elif kind == GAMMA_TR:
            if zero and not a & two:
                return False
            if not zero and P == 0:
                return False
        elif kind == GAMMA_X2:
            if P + (0 if zero else 1) < 2:
                return False
        else:
            if zero and S < (1 if (kind == NEAR and x == v0) else 2):
                return False
            if not zero and P == 0:
                return False
    return True


def brute_force(adj, n, kind, v0):
    """Scan every labelling; returns ``(value, lexmin optimum)`` or ``(-1, None)``."""
    best = -1
    witness = None
    for labels in product(range(max_label(kind) + 1), repeat=n):
        w = sum(labels)
        if best >= 0 and w >= best:
            continue
        pos = two = 0
        for v, c in enumerate(labels):
            if c:
                pos |= 1 << v
                if c == 2:
                    two |= 1 << v
        if feasible_masks(adj, n, kind, v0, pos, two):
            best = w
            witness = labels
    return best, witness
