# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (uint64 bitsets, n <= 64).

Mirrors ``_pure`` function for function; the Python layer picks whichever
is importable.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64

cdef enum:
    GAMMA = 0
    GAMMA_T = 1
    GAMMA_R2 = 2
    GAMMA_TR = 3
    GAMMA_TR2 = 4
    GAMMA_X2 = 5
    NEAR = 6

cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef struct State:
    int n
    int kind
    int v0
    int top
    uint64_t adj[MAXN]
    int val[MAXN]
    uint64_t assigned
    uint64_t pos
    uint64_t two
    int weight
    int64_t nodes
    # driver fields
    int order[MAXN]
    int depth_limit
    int best
    int target
    int stop
    int mode


cdef inline bint ok_value(State* st, int x, int c, int S, int P, int T, int U) noexcept nogil:
    cdef int k = st.kind
    cdef int need
    if k == GAMMA:
        return c > 0 or P + U >= 1
    if k == GAMMA_T:
        return P + U >= 1
    if k == GAMMA_R2:
        return c > 0 or S + 2 * U >= 2
    if k == GAMMA_TR:
        if c == 0:
            return T + U >= 1
        return P + U >= 1
    if k == GAMMA_X2:
        if c == 0:
            return P + U >= 2
        return P + U >= 1
    if c == 0:
        need = 2
        if k == NEAR and x == st.v0:
            need = 1
        return S + 2 * U >= need
    return P + U >= 1


cdef inline bint ok_vertex(State* st, int x) noexcept nogil:
    cdef uint64_t a = st.adj[x]
    cdef int P = popc(a & st.pos)
    cdef int T = popc(a & st.two)
    cdef int U = popc(a & ~st.assigned)
    cdef int c = st.val[x]
    if c >= 0:
        return ok_value(st, x, c, P + T, P, T, U)
    for c in range(st.top + 1):
        if ok_value(st, x, c, P + T, P, T, U):
            return True
    return False


cdef inline void residual(State* st, int x, int S, int P, int T, int* r, int* sw) noexcept nogil:
    cdef int k = st.kind
    cdef int c = st.val[x]
    cdef int need
    if k == GAMMA:
        if c > 0:
            r[0] = 0; sw[0] = 0
            return
        r[0] = 0 if P else 1
        sw[0] = 1 if c < 0 else 0
        return
    if k == GAMMA_T:
        r[0] = 0 if P else 1
        sw[0] = 0
        return
    if k == GAMMA_R2:
        if c > 0:
            r[0] = 0; sw[0] = 0
            return
        r[0] = 2 - S if S < 2 else 0
        sw[0] = 2 if c < 0 else 0
        return
    if k == GAMMA_X2:
        if c >= 0:
            need = 2 - c - P
            r[0] = need if need > 0 else 0
            sw[0] = 0
            return
        r[0] = 2 - P if P < 2 else 0
        sw[0] = 1
        return
    if c > 0:
        r[0] = 0 if P else 1
        sw[0] = 0
        return
    if k == GAMMA_TR:
        if c == 0:
            r[0] = 0 if T else 2
            sw[0] = 0
            return
        r[0] = 2 - S if S < 2 else 0
        sw[0] = 1
        return
    need = 2
    if k == NEAR and x == st.v0:
        need = 1
    r[0] = need - S if S < need else 0
    sw[0] = 0 if c == 0 else 1


cdef int lower_bound(State* st) noexcept nogil:
    cdef int n = st.n
    cdef uint64_t full = (<uint64_t>0xFFFFFFFFFFFFFFFF) if n == 64 else ((<uint64_t>1 << n) - 1)
    cdef uint64_t free = ~st.assigned & full
    cdef int resid[MAXN]
    cdef int selfw[MAXN]
    cdef uint64_t pools[MAXN]
    cdef int covcount[2 * MAXN + 8]
    cdef int total = 0
    cdef int x, u, P, T, r, sw, want, cov, pack, units, got, i, j
    cdef uint64_t a, used, m
    for x in range(n):
        a = st.adj[x]
        P = popc(a & st.pos)
        T = popc(a & st.two)
        residual(st, x, P + T, P, T, &r, &sw)
        resid[x] = r
        selfw[x] = sw
        if r:
            pools[x] = (a & free) | ((<uint64_t>1 << x) if sw else 0)
            total += r
        else:
            pools[x] = 0
    if total == 0:
        return 0
    used = 0
    pack = 0
    for want in range(2, 0, -1):
        for x in range(n):
            if resid[x] == want and not (pools[x] & used):
                used |= pools[x]
                pack += 1 if selfw[x] == 2 else resid[x]
    # coverage values are bounded by n + 2; bucket them
    memset(covcount, 0, sizeof(covcount))
    m = free
    while m:
        u = __builtin_ctzll(m)
        m &= m - 1
        cov = 0
        for x in range(n):
            if resid[x] and ((pools[x] >> u) & 1):
                if x == u:
                    cov += resid[x] if resid[x] < selfw[x] else selfw[x]
                else:
                    cov += 1
        if cov:
            covcount[cov] += st.top
    units = 0
    got = 0
    i = 2 * MAXN + 7
    while i > 0 and got < total:
        j = covcount[i]
        while j > 0 and got < total:
            got += i
            units += 1
            j -= 1
        i -= 1
    if got < total:
        return 2 * n + 1
    return units if units > pack else pack


cdef inline bint assign(State* st, int v, int c) noexcept nogil:
    cdef uint64_t bit = <uint64_t>1 << v
    cdef uint64_t m
    cdef int x
    st.val[v] = c
    st.assigned |= bit
    if c:
        st.pos |= bit
        if c == 2:
            st.two |= bit
    st.weight += c
    if not ok_vertex(st, v):
        return False
    m = st.adj[v]
    while m:
        x = __builtin_ctzll(m)
        m &= m - 1
        if not ok_vertex(st, x):
            return False
    return True


cdef inline void unassign(State* st, int v) noexcept nogil:
    cdef uint64_t bit = <uint64_t>1 << v
    st.weight -= st.val[v]
    st.val[v] = -1
    st.assigned &= ~bit
    st.pos &= ~bit
    st.two &= ~bit


cdef void init_state(State* st, list adj, int n, int kind, int v0) except *:
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    st.n = n
    st.kind = kind
    st.v0 = v0
    st.top = 1 if (kind == GAMMA or kind == GAMMA_T or kind == GAMMA_X2) else 2
    for i in range(n):
        st.adj[i] = <uint64_t>adj[i]
        st.val[i] = -1
    st.assigned = 0
    st.pos = 0
    st.two = 0
    st.weight = 0
    st.nodes = 0
    st.stop = 0


cdef void dfs_min(State* st, int d) noexcept nogil:
    cdef int v, c
    st.nodes += 1
    if d == st.depth_limit:
        if st.weight < st.best:
            st.best = st.weight
        return
    v = st.order[d]
    for c in range(st.top + 1):
        if assign(st, v, c):
            if st.weight + lower_bound(st) < st.best:
                dfs_min(st, d + 1)
        unassign(st, v)


def search_min(list adj, int n, int kind, int v0, order, int upper, int fixed_vertex=-1, int fixed_value=0):
    """Minimum weight strictly below ``upper`` (or ``upper``); returns ``(best, nodes)``."""
    cdef State st
    cdef int i = 0
    init_state(&st, adj, n, kind, v0)
    for v in order:
        if v != fixed_vertex:
            st.order[i] = v
            i += 1
    st.depth_limit = i
    st.best = upper
    if fixed_vertex >= 0:
        if not assign(&st, fixed_vertex, fixed_value):
            return upper, 1
    with nogil:
        if st.weight + lower_bound(&st) < st.best:
            dfs_min(&st, 0)
    return st.best, st.nodes


cdef list _lex_dfs(list adj, int n, int kind, int v0, int target, bint collect):
    cdef State st
    cdef list out = []
    cdef int d, c, i
    cdef int nxt[MAXN]
    init_state(&st, adj, n, kind, v0)
    if lower_bound(&st) > target:
        return out
    if n == 0:
        out.append(())
        return out
    # iterative DFS over vertices in index order; nxt[d] = next value to try
    d = 0
    nxt[0] = 0
    while d >= 0:
        if nxt[d] > st.top:
            d -= 1
            if d >= 0:
                unassign(&st, d)
            continue
        c = nxt[d]
        nxt[d] += 1
        st.nodes += 1
        if assign(&st, d, c) and st.weight + lower_bound(&st) <= target:
            if d + 1 == n:
                out.append(tuple([st.val[i] for i in range(n)]))
                if not collect:
                    return out
                unassign(&st, d)
            else:
                d += 1
                nxt[d] = 0
        else:
            unassign(&st, d)
    return out


def first_lex(list adj, int n, int kind, int v0, int target):
    """Lexicographically smallest feasible labelling of weight <= target, or None."""
    found = _lex_dfs(adj, n, kind, v0, target, False)
    return found[0] if found else None


def enumerate_all(list adj, int n, int kind, int v0, int target):
    """Every feasible labelling of weight <= target, in lexicographic order."""
    return _lex_dfs(adj, n, kind, v0, target, True)


cdef bint feasible_masks(uint64_t* adj, int n, int kind, int v0, uint64_t pos, uint64_t two) noexcept nogil:
    cdef int x, P, S
    cdef bint zero
    cdef uint64_t a
    for x in range(n):
        a = adj[x]
        P = popc(a & pos)
        S = P + popc(a & two)
        zero = not ((pos >> x) & 1)
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
            if zero and not (a & two):
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


def brute_force(list adj, int n, int kind, int v0):
    """Scan every labelling in lexicographic order; ``(value, lexmin optimum)``."""
    cdef uint64_t cadj[MAXN]
    cdef int digits[MAXN]
    cdef int best_digits[MAXN]
    cdef int top = 1 if (kind == GAMMA or kind == GAMMA_T or kind == GAMMA_X2) else 2
    cdef int best = -1
    cdef int i, w
    cdef uint64_t pos, two
    if n > 40:
        raise ValueError("exhaustive scan refused above 40 vertices")
    for i in range(n):
        cadj[i] = <uint64_t>adj[i]
        digits[i] = 0
    with nogil:
        while True:
            w = 0
            pos = 0
            two = 0
            for i in range(n):
                w += digits[i]
                if digits[i]:
                    pos |= <uint64_t>1 << i
                    if digits[i] == 2:
                        two |= <uint64_t>1 << i
            if (best < 0 or w < best) and feasible_masks(cadj, n, kind, v0, pos, two):
                best = w
                for i in range(n):
                    best_digits[i] = digits[i]
            # odometer, last vertex fastest
            i = n - 1
            while i >= 0 and digits[i] == top:
                digits[i] = 0
                i -= 1
            if i < 0:
                break
            digits[i] += 1
    if best < 0:
        return -1, None
    return best, tuple([best_digits[i] for i in range(n)])
