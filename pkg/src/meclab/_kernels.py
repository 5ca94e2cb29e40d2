"""Pure-Python hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and results; :mod:`meclab._backend` picks one at import time.

Graphs are passed as ``adj``, the skeleton adjacency masks of the base graph,
plus ``S``, the mask of the induced node set being worked on.  Working
orientations are held in three mask lists: ``und`` (undirected neighbours),
``pa`` (parents) and ``ch`` (children).
"""

NAME = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


def forcing_rule(und, pa, ch, adj, scope, a, b):
    """Return the Meek rule (1-4) forcing the undirected edge a-b to a->b, else 0."""
    if pa[a] & scope & ~adj[b]:
        return 1
    if ch[a] & pa[b] & scope:
        return 2
    common = und[a] & pa[b] & scope
    if common & (common - 1):
        for c in _bits(common):
            if common & ~adj[c] & ~(1 << c):
                return 3
    for c in _bits(pa[b] & adj[a] & scope):
        if pa[c] & adj[a] & ~adj[b] & scope & ~(1 << b):
            return 4
    return 0


def _orient(und, pa, ch, a, b):
    und[a] &= ~(1 << b)
    und[b] &= ~(1 << a)
    ch[a] |= 1 << b
    pa[b] |= 1 << a


def _unorient(und, pa, ch, a, b):
    """Make the edge a-b undirected whatever its current state."""
    ba, bb = 1 << a, 1 << b
    und[a] |= bb
    und[b] |= ba
    ch[a] &= ~bb
    ch[b] &= ~ba
    pa[a] &= ~bb
    pa[b] &= ~ba


def meek(und, pa, ch, adj, scope):
    """Close the orientation under Meek rules inside ``scope``, in place."""
    changed = True
    while changed:
        changed = False
        for a in _bits(scope):
            for b in _bits(und[a] & scope):
                if not und[a] >> b & 1:
                    continue
                if forcing_rule(und, pa, ch, adj, scope, a, b):
                    _orient(und, pa, ch, a, b)
                    changed = True


def _split(out, n):
    inn = [0] * n
    for a in range(n):
        for b in _bits(out[a]):
            inn[b] |= 1 << a
    und = [out[a] & inn[a] for a in range(n)]
    pa = [inn[a] & ~out[a] for a in range(n)]
    ch = [out[a] & ~inn[a] for a in range(n)]
    return und, pa, ch


def closure(out, scope):
    """Meek closure of the graph given by ``out`` masks, restricted to ``scope``."""
    n = len(out)
    und, pa, ch = _split(out, n)
    adj = [und[a] | pa[a] | ch[a] for a in range(n)]
    meek(und, pa, ch, adj, scope)
    return tuple(und[a] | ch[a] for a in range(n))


def _base(adj, S):
    n = len(adj)
    und = [adj[x] & S if S >> x & 1 else 0 for x in range(n)]
    return und, [0] * n, [0] * n


def _reach(adj, allowed, v):
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for x in _bits(frontier):
            nxt |= adj[x]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def root_state(adj, S, v):
    """Orientation with ``v`` as root and its partition (P, C, A, D)."""
    und, pa, ch = _base(adj, S)
    for c in _bits(und[v]):
        _orient(und, pa, ch, v, c)
    meek(und, pa, ch, adj, S)
    C = adj[v] & S
    return (und, pa, ch), 0, C, 0, S & ~C & ~(1 << v)


def derive_state(adj, S, v, state, P, C, A, D, u):
    """Reorient the result for parent set P into the one for P + {u}."""
    und, pa, ch = (list(x) for x in state)
    bu = 1 << u
    Pu = P | bu
    allowed = S & ~Pu
    M = allowed & ~_reach(adj, allowed, v) & ~A
    # step 2: flip v->u, undirect inside M+u and between P and M+u
    _unorient(und, pa, ch, u, v)
    _orient(und, pa, ch, u, v)
    Mu = M | bu
    for x in _bits(Mu):
        for y in _bits(adj[x] & (Mu | P)):
            if x < y or not Mu >> y & 1:
                _unorient(und, pa, ch, x, y)
    # step 3: u -> c for the other children, then close inside the old C
    for c in _bits(adj[u] & C & ~bu):
        _unorient(und, pa, ch, u, c)
        _orient(und, pa, ch, u, c)
    meek(und, pa, ch, adj, C)
    return (und, pa, ch), Pu, C & ~bu, A | M, D & ~M


def _walk(adj, S, v, emit):
    state, P, C, A, D = root_state(adj, S, v)
    _iter(adj, S, v, state, P, C, A, D, -1, S, emit)


def _iter(adj, S, v, state, P, C, A, D, top, common, emit):
    emit(state, P, C, A, D)
    cand = C & common & ~((2 << top) - 1 if top >= 0 else 0)
    for u in _bits(cand):
        child = derive_state(adj, S, v, state, P, C, A, D, u)
        _iter(adj, S, v, *child, u, common & adj[u], emit)


def lazy_results(adj, S, v):
    """All results for root ``v`` as ``(out_masks, P, C, A, D)`` tuples."""
    n = len(adj)
    found = []

    def emit(state, P, C, A, D):
        und, _, ch = state
        found.append((tuple(und[x] | ch[x] for x in range(n)), P, C, A, D))

    _walk(adj, S, v, emit)
    return found


def _components(und, S):
    comps = []
    rest = 0
    for x in _bits(S):
        if und[x]:
            rest |= 1 << x
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            nxt = 0
            for x in _bits(frontier):
                nxt |= und[x]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return tuple(comps)


def lazy_components(adj, S, v):
    """Per result: number of directed edges and the non-singleton chain components."""
    found = []

    def emit(state, P, C, A, D):
        und, _, ch = state
        ndir = 0
        for x in _bits(S):
            ndir += _popcount(ch[x])
        found.append((ndir, _components(und, S)))

    _walk(adj, S, v, emit)
    return found


def lazy_count(adj, S, v):
    box = [0]

    def emit(state, P, C, A, D):
        box[0] += 1

    _walk(adj, S, v, emit)
    return box[0]


def eager_state(adj, S, v, P):
    und, pa, ch = _base(adj, S)
    for x in _bits(und[v]):
        if P >> x & 1:
            _orient(und, pa, ch, x, v)
        else:
            _orient(und, pa, ch, v, x)
    meek(und, pa, ch, adj, S)
    return und, pa, ch


def eager_result(adj, S, v, P):
    und, _, ch = eager_state(adj, S, v, P)
    return tuple(u | c for u, c in zip(und, ch))


def neighbourhood_cliques(adj, S, v):
    """Cliques of ``G[ne(v)]`` (including the empty one) in extension order."""
    out = []

    def rec(P, cand):
        out.append(P)
        for u in _bits(cand):
            rec(P | (1 << u), cand & adj[u] & ~((2 << u) - 1))

    rec(0, adj[v] & S)
    return out


def eager_count(adj, S, v):
    """Per-clique recomputation baseline; returns the number of results."""
    total = 0
    for P in neighbourhood_cliques(adj, S, v):
        eager_state(adj, S, v, P)
        total += 1
    return total
