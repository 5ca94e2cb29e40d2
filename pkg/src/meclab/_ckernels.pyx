# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of :mod:`meclab._kernels`.

Orientations live in fixed 64-word arrays of bit masks, so graphs are
limited to 64 nodes.  Function names, arguments and return values match the
pure-Python module exactly.
"""

from libc.string cimport memcpy

NAME = "compiled"

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(u64) nogil noexcept
    int __builtin_popcountll(u64) nogil noexcept

cdef enum:
    MAXN = 64
    EMIT_COUNT = 0
    EMIT_COMPONENTS = 1
    EMIT_RESULTS = 2

cdef struct State:
    u64 und[MAXN]
    u64 pa[MAXN]
    u64 ch[MAXN]

cdef struct Ctx:
    int n
    int v
    u64 S
    u64 adj[MAXN]

cdef inline int ctz(u64 m) noexcept nogil:
    return __builtin_ctzll(m)


cdef inline int popcount(u64 m) noexcept nogil:
    return __builtin_popcountll(m)


cdef inline u64 bit(int x) noexcept nogil:
    return (<u64>1) << x


cdef inline void orient(State* s, int a, int b) noexcept nogil:
    s.und[a] &= ~bit(b)
    s.und[b] &= ~bit(a)
    s.ch[a] |= bit(b)
    s.pa[b] |= bit(a)


cdef inline void unorient(State* s, int a, int b) noexcept nogil:
    cdef u64 ba = bit(a), bb = bit(b)
    s.und[a] |= bb
    s.und[b] |= ba
    s.ch[a] &= ~bb
    s.ch[b] &= ~ba
    s.pa[a] &= ~bb
    s.pa[b] &= ~ba


cdef int rule_for(State* s, const u64* adj, u64 scope, int a, int b) noexcept nogil:
    cdef u64 common, m
    cdef int c
    if s.pa[a] & scope & ~adj[b]:
        return 1
    if s.ch[a] & s.pa[b] & scope:
        return 2
    common = s.und[a] & s.pa[b] & scope
    if common & (common - 1):
        m = common
        while m:
            c = ctz(m)
            m &= m - 1
            if common & ~adj[c] & ~bit(c):
                return 3
    m = s.pa[b] & adj[a] & scope
    while m:
        c = ctz(m)
        m &= m - 1
        if s.pa[c] & adj[a] & ~adj[b] & scope & ~bit(b):
            return 4
    return 0


cdef void meek(State* s, const u64* adj, u64 scope) noexcept nogil:
    cdef bint changed = True
    cdef u64 ma, mb
    cdef int a, b
    while changed:
        changed = False
        ma = scope
        while ma:
            a = ctz(ma)
            ma &= ma - 1
            mb = s.und[a] & scope
            while mb:
                b = ctz(mb)
                mb &= mb - 1
                if not (s.und[a] >> b) & 1:
                    continue
                if rule_for(s, adj, scope, a, b):
                    orient(s, a, b)
                    changed = True


cdef u64 reach(const u64* adj, u64 allowed, int v) noexcept nogil:
    cdef u64 seen = bit(v), frontier = bit(v), nxt, m
    cdef int x
    while frontier:
        nxt = 0
        m = frontier
        while m:
            x = ctz(m)
            m &= m - 1
            nxt |= adj[x]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef void base_state(Ctx* cx, State* s) noexcept nogil:
    cdef int x
    for x in range(cx.n):
        if (cx.S >> x) & 1:
            s.und[x] = cx.adj[x] & cx.S
        else:
            s.und[x] = 0
        s.pa[x] = 0
        s.ch[x] = 0


cdef void derive(Ctx* cx, State* src, State* dst, u64 P, u64 C, u64 A, int u, u64* M_out) noexcept nogil:
    cdef u64 bu = bit(u), Pu = P | bu, allowed, M, Mu, m, my
    cdef int x, y
    memcpy(dst, src, sizeof(State))
    allowed = cx.S & ~Pu
    M = allowed & ~reach(cx.adj, allowed, cx.v) & ~A
    unorient(dst, u, cx.v)
    orient(dst, u, cx.v)
    Mu = M | bu
    m = Mu
    while m:
        x = ctz(m)
        m &= m - 1
        my = cx.adj[x] & (Mu | P)
        while my:
            y = ctz(my)
            my &= my - 1
            if x < y or not (Mu >> y) & 1:
                unorient(dst, x, y)
    m = cx.adj[u] & C & ~bu
    while m:
        x = ctz(m)
        m &= m - 1
        unorient(dst, u, x)
        orient(dst, u, x)
    meek(dst, cx.adj, C)
    M_out[0] = M


cdef tuple components(State* s, u64 S):
    cdef list comps = []
    cdef u64 rest = 0, comp, frontier, nxt, m
    cdef int x
    m = S
    while m:
        x = ctz(m)
        m &= m - 1
        if s.und[x]:
            rest |= bit(x)
    while rest:
        comp = rest & (~rest + 1)
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                x = ctz(m)
                m &= m - 1
                nxt |= s.und[x]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return tuple(comps)


cdef object emit(Ctx* cx, State* s, u64 P, u64 C, u64 A, u64 D, int mode):
    cdef int x, ndir
    cdef u64 m
    if mode == EMIT_RESULTS:
        return (tuple([s.und[x] | s.ch[x] for x in range(cx.n)]), P, C, A, D)
    ndir = 0
    m = cx.S
    while m:
        x = ctz(m)
        m &= m - 1
        ndir += popcount(s.ch[x])
    return (ndir, components(s, cx.S))


cdef long long walk_rec(Ctx* cx, State* s, u64 P, u64 C, u64 A, u64 D, int top, u64 common,
                        int mode, list sink) except -1:
    cdef State child
    cdef u64 cand, M
    cdef int u
    cdef long long total = 1
    if mode != EMIT_COUNT:
        sink.append(emit(cx, s, P, C, A, D, mode))
    cand = C & common
    if top >= 0:
        cand &= ~((bit(top) << 1) - 1)
    while cand:
        u = ctz(cand)
        cand &= cand - 1
        derive(cx, s, &child, P, C, A, u, &M)
        total += walk_rec(cx, &child, P | bit(u), C & ~bit(u), A | M, D & ~M, u,
                          common & cx.adj[u], mode, sink)
    return total


cdef int load(Ctx* cx, adj, S, int v) except -1:
    cdef int x
    cx.n = len(adj)
    if cx.n > MAXN:
        raise ValueError("at most 64 nodes are supported")
    for x in range(cx.n):
        cx.adj[x] = adj[x]
    cx.S = S
    cx.v = v
    return 0


cdef void root(Ctx* cx, State* s) noexcept nogil:
    cdef u64 m
    cdef int c
    base_state(cx, s)
    m = s.und[cx.v]
    while m:
        c = ctz(m)
        m &= m - 1
        orient(s, cx.v, c)
    meek(s, cx.adj, cx.S)


cdef object walk(adj, S, int v, int mode):
    cdef Ctx cx
    cdef State s
    cdef u64 C
    cdef list sink = []
    cdef long long total
    load(&cx, adj, S, v)
    root(&cx, &s)
    C = cx.adj[v] & cx.S
    total = walk_rec(&cx, &s, 0, C, 0, cx.S & ~C & ~bit(v), -1, cx.S, mode, sink)
    if mode == EMIT_COUNT:
        return total
    return sink


def lazy_results(adj, S, v):
    return walk(adj, S, v, EMIT_RESULTS)


def lazy_components(adj, S, v):
    return walk(adj, S, v, EMIT_COMPONENTS)


def lazy_count(adj, S, v):
    return walk(adj, S, v, EMIT_COUNT)


cdef void eager(Ctx* cx, State* s, u64 P) noexcept nogil:
    cdef u64 m
    cdef int x
    base_state(cx, s)
    m = s.und[cx.v]
    while m:
        x = ctz(m)
        m &= m - 1
        if (P >> x) & 1:
            orient(s, x, cx.v)
        else:
            orient(s, cx.v, x)
    meek(s, cx.adj, cx.S)


def eager_result(adj, S, v, P):
    cdef Ctx cx
    cdef State s
    cdef int x
    load(&cx, adj, S, v)
    eager(&cx, &s, P)
    return tuple([s.und[x] | s.ch[x] for x in range(cx.n)])


cdef long long eager_rec(Ctx* cx, State* s, u64 P, u64 cand) noexcept nogil:
    cdef long long total = 1
    cdef int u
    eager(cx, s, P)
    while cand:
        u = ctz(cand)
        cand &= cand - 1
        total += eager_rec(cx, s, P | bit(u), cand & cx.adj[u] & ~((bit(u) << 1) - 1))
    return total


def eager_count(adj, S, v):
    cdef Ctx cx
    cdef State s
    load(&cx, adj, S, v)
    return eager_rec(&cx, &s, 0, cx.adj[v] & cx.S)


def neighbourhood_cliques(adj, S, v):
    out = []

    def rec(P, cand):
        out.append(P)
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            rec(P | low, cand & adj[u] & ~((2 << u) - 1))

    rec(0, adj[v] & S)
    return out


def closure(out, scope):
    cdef State s
    cdef u64 adjm[MAXN]
    cdef u64 inn[MAXN]
    cdef u64 o[MAXN]
    cdef int n = len(out), a, b
    cdef u64 m
    if n > MAXN:
        raise ValueError("at most 64 nodes are supported")
    for a in range(n):
        o[a] = out[a]
        inn[a] = 0
    for a in range(n):
        m = o[a]
        while m:
            b = ctz(m)
            m &= m - 1
            inn[b] |= bit(a)
    for a in range(n):
        s.und[a] = o[a] & inn[a]
        s.pa[a] = inn[a] & ~o[a]
        s.ch[a] = o[a] & ~inn[a]
        adjm[a] = o[a] | inn[a]
    meek(&s, adjm, scope)
    return tuple([s.und[a] | s.ch[a] for a in range(n)])
