"""Partially directed graphs over indexed nodes.

A :class:`PdGraph` stores, for every node ``a``, a bit mask of the nodes
``b`` such that the ordered pair ``(a, b)`` is in the edge set.  An edge is
undirected when both ``(a, b)`` and ``(b, a)`` are present, and directed
``a -> b`` when only ``(a, b)`` is.  The same type represents undirected
chordal components, CPDAGs, interventional essential graphs and DAGs.

Node sets are exchanged as ``frozenset`` objects at the public surface and as
integer bit masks inside the algorithms; :func:`to_mask` and
:func:`from_mask` convert between the two.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import ContractError, GraphParseError, NotChordalError

MAX_NODES = 64

NodeSet = FrozenSet[int]
NodesLike = Union[int, Iterable[int]]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(nodes: NodesLike) -> int:
    if isinstance(nodes, int):
        return nodes
    m = 0
    for x in nodes:
        m |= 1 << x
    return m


def from_mask(mask: int) -> NodeSet:
    return frozenset(bits(mask))


class PdGraph:
    """Partially directed graph on nodes ``0..n-1``.

    Instances are immutable and hashable; two graphs compare equal when they
    have the same node count and the same ordered-pair edge set.
    """

    __slots__ = ("n", "_out", "_inn", "_hash")

    def __init__(self, n: int, out: Optional[Sequence[int]] = None):
        if n < 0:
            raise ContractError("node count must be nonnegative")
        if n > MAX_NODES:
            raise ContractError(f"at most {MAX_NODES} nodes are supported, got {n}")
        if out is None:
            out = (0,) * n
        out = tuple(out)
        if len(out) != n:
            raise ContractError("one out-mask per node is required")
        full = (1 << n) - 1
        for a, m in enumerate(out):
            if m >> a & 1:
                raise ContractError(f"self-loop at node {a}")
            if m & ~full:
                raise ContractError(f"edge from {a} to a node outside 0..{n - 1}")
        self.n = n
        self._out = out
        self._inn = None
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, undirected: Iterable[Tuple[int, int]] = (),
                   directed: Iterable[Tuple[int, int]] = ()) -> "PdGraph":
        out = [0] * n
        for a, b in undirected:
            _check_pair(n, a, b)
            out[a] |= 1 << b
            out[b] |= 1 << a
        for a, b in directed:
            _check_pair(n, a, b)
            if out[b] >> a & 1:
                raise ContractError(f"edge {a}-{b} declared twice")
            out[a] |= 1 << b
        return cls(n, out)

    @classmethod
    def complete(cls, n: int) -> "PdGraph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << a) for a in range(n)])

    @classmethod
    def path(cls, n: int) -> "PdGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> "PdGraph":
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    # -- raw access ---------------------------------------------------
    @property
    def out_masks(self) -> Tuple[int, ...]:
        return self._out

    @property
    def in_masks(self) -> Tuple[int, ...]:
        if self._inn is None:
            inn = [0] * self.n
            for a, m in enumerate(self._out):
                for b in bits(m):
                    inn[b] |= 1 << a
            self._inn = tuple(inn)
        return self._inn

    def adj_masks(self) -> List[int]:
        """Skeleton adjacency masks."""
        inn = self.in_masks
        return [o | i for o, i in zip(self._out, inn)]

    # -- edge predicates ----------------------------------------------
    def has_pair(self, a: int, b: int) -> bool:
        return bool(self._out[a] >> b & 1)

    def is_adjacent(self, a: int, b: int) -> bool:
        return self.has_pair(a, b) or self.has_pair(b, a)

    def is_undirected_edge(self, a: int, b: int) -> bool:
        return self.has_pair(a, b) and self.has_pair(b, a)

    def is_directed_edge(self, a: int, b: int) -> bool:
        return self.has_pair(a, b) and not self.has_pair(b, a)

    def neighbors(self, v: int) -> NodeSet:
        """Undirected neighbours of ``v``."""
        return from_mask(self._out[v] & self.in_masks[v])

    def parents(self, v: int) -> NodeSet:
        return from_mask(self.in_masks[v] & ~self._out[v])

    def children(self, v: int) -> NodeSet:
        return from_mask(self._out[v] & ~self.in_masks[v])

    def adjacent(self, v: int) -> NodeSet:
        return from_mask(self._out[v] | self.in_masks[v])

    def degree(self, v: int) -> int:
        return bin(self._out[v] | self.in_masks[v]).count("1")

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    # -- edge lists -----------------------------------------------------
    def undirected_edges(self) -> List[Tuple[int, int]]:
        inn = self.in_masks
        return [(a, b) for a in range(self.n) for b in bits(self._out[a] & inn[a]) if a < b]

    def directed_edges(self) -> List[Tuple[int, int]]:
        inn = self.in_masks
        return [(a, b) for a in range(self.n) for b in bits(self._out[a] & ~inn[a])]

    def skeleton_edges(self) -> List[Tuple[int, int]]:
        adj = self.adj_masks()
        return [(a, b) for a in range(self.n) for b in bits(adj[a]) if a < b]

    def edge_count(self) -> int:
        return len(self.skeleton_edges())

    def is_undirected(self) -> bool:
        return self._out == self.in_masks

    def is_fully_directed(self) -> bool:
        inn = self.in_masks
        return all(o & i == 0 for o, i in zip(self._out, inn))

    # -- derived graphs -------------------------------------------------
    def skeleton(self) -> "PdGraph":
        return PdGraph(self.n, self.adj_masks())

    def induced(self, nodes: NodesLike) -> "PdGraph":
        """``G[S]`` keeping the original indexing; nodes outside S become isolated."""
        s = to_mask(nodes)
        return PdGraph(self.n, [(m & s) if s >> a & 1 else 0 for a, m in enumerate(self._out)])

    # -- dunder ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, PdGraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._out))
        return self._hash

    def __repr__(self):
        parts = [f"{a}-{b}" for a, b in self.undirected_edges()]
        parts += [f"{a}->{b}" for a, b in self.directed_edges()]
        return f"PdGraph(n={self.n}, [{', '.join(parts)}])"


def _check_pair(n, a, b):
    if not (0 <= a < n and 0 <= b < n):
        raise ContractError(f"edge ({a},{b}) outside 0..{n - 1}")
    if a == b:
        raise ContractError(f"self-loop at node {a}")


# ---------------------------------------------------------------------------
# Text format

def parse_graph(text: str) -> PdGraph:
    """Parse the line-oriented graph format.

    Line 1 holds the node count; every later non-empty line is ``u v`` for an
    undirected edge or ``u -> v`` for a directed one.  ``#`` comments run to
    the end of the line.
    """
    n = None
    out: List[int] = []
    declared = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise GraphParseError(f"expected node count, got {line!r}", lineno) from None
            if n < 0 or n > MAX_NODES:
                raise GraphParseError(f"node count must be in 0..{MAX_NODES}", lineno)
            out = [0] * n
            continue
        if "->" in line:
            left, _, right = line.partition("->")
            toks = [left.strip(), right.strip()]
            directed = True
        else:
            toks = line.split()
            directed = False
        if len(toks) != 2:
            raise GraphParseError(f"malformed edge line {raw!r}", lineno)
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphParseError(f"malformed edge line {raw!r}", lineno) from None
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(f"node index out of range 0..{n - 1}", lineno)
        if a == b:
            raise GraphParseError(f"self-loop at node {a}", lineno)
        kind = (a, b) if directed else None
        key = (min(a, b), max(a, b))
        if key in declared:
            if declared[key] != kind:
                raise GraphParseError(f"contradictory declarations of edge {key[0]},{key[1]}", lineno)
            continue
        declared[key] = kind
        out[a] |= 1 << b
        if not directed:
            out[b] |= 1 << a
    if n is None:
        raise GraphParseError("empty document: missing node count", 1)
    return PdGraph(n, out)


def format_graph(g: PdGraph) -> str:
    lines = [str(g.n)]
    rows = [(a, b, False) for a, b in g.undirected_edges()]
    rows += [(a, b, True) for a, b in g.directed_edges()]
    rows.sort()
    for a, b, directed in rows:
        lines.append(f"{a} -> {b}" if directed else f"{a} {b}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structural queries

def chain_components(g: PdGraph) -> List[NodeSet]:
    """Connected components of the undirected part, ordered by smallest member."""
    und = [o & i for o, i in zip(g.out_masks, g.in_masks)]
    return [from_mask(c) for c in components_of(und, (1 << g.n) - 1)]


def components_of(und: Sequence[int], scope: int) -> List[int]:
    """Connected components (as masks) of the graph ``und`` restricted to ``scope``."""
    comps = []
    rest = scope
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= und[x]
            nxt &= scope & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def reachable_mask(adj: Sequence[int], allowed: int, v: int) -> int:
    """Nodes reachable from ``v`` through nodes of ``allowed`` (``v`` included)."""
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def unreachable_from(g: PdGraph, v: int, blocked: NodesLike = ()) -> NodeSet:
    """Nodes separated from ``v`` by ``blocked`` in the skeleton of ``g``."""
    b = to_mask(blocked)
    if b >> v & 1:
        raise ContractError(f"root {v} is inside the blocked set")
    allowed = ((1 << g.n) - 1) & ~b
    seen = reachable_mask(g.adj_masks(), allowed, v)
    return from_mask(allowed & ~seen)


def is_clique(g: PdGraph, nodes: NodesLike) -> bool:
    s = to_mask(nodes)
    adj = g.adj_masks()
    return all(s & ~(1 << x) & ~adj[x] == 0 for x in bits(s))


def directed_edge_count(g: PdGraph) -> int:
    return sum(bin(o & ~i).count("1") for o, i in zip(g.out_masks, g.in_masks))


def v_structures(d: PdGraph) -> set:
    """Colliders ``a -> b <- c`` with ``a``, ``c`` nonadjacent, reported with ``a < c``."""
    if not d.is_fully_directed():
        raise ContractError("v_structures requires a fully directed graph")
    adj = d.adj_masks()
    found = set()
    for b in range(d.n):
        pa = sorted(d.parents(b))
        for a, c in combinations(pa, 2):
            if not adj[a] >> c & 1:
                found.add((a, b, c))
    return found


def _require_undirected(g: PdGraph, what: str):
    if not g.is_undirected():
        raise ContractError(f"{what} requires an undirected graph")


def mcs_order(g: PdGraph) -> List[int]:
    """Maximum cardinality search visiting order, ties to the smallest index."""
    adj = g.adj_masks()
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best = -1
        for x in range(g.n):
            if not visited >> x & 1 and (best < 0 or weight[x] > weight[best]):
                best = x
        order.append(best)
        visited |= 1 << best
        for y in bits(adj[best] & ~visited):
            weight[y] += 1
    return order


def is_peo(g: PdGraph, order: Sequence[int]) -> bool:
    """True when every vertex and its earlier neighbours in ``order`` form a clique."""
    adj = g.adj_masks()
    earlier = 0
    for x in order:
        if not is_clique_mask(adj, adj[x] & earlier):
            return False
        earlier |= 1 << x
    return True


def is_clique_mask(adj: Sequence[int], s: int) -> bool:
    for x in bits(s):
        if s & ~(1 << x) & ~adj[x]:
            return False
    return True


def is_chordal(g: PdGraph) -> bool:
    _require_undirected(g, "is_chordal")
    return is_peo(g, mcs_order(g))


def chordless_cycle(g: PdGraph) -> Optional[List[int]]:
    """Return a chordless cycle of length >= 4, or None for chordal graphs.

    Scans ``x`` ascending and nonadjacent neighbour pairs ``y < z``; a shortest
    ``y``-``z`` path avoiding the other neighbours of ``x`` closes the cycle.
    """
    adj = g.adj_masks()
    full = (1 << g.n) - 1
    for x in range(g.n):
        nb = sorted(bits(adj[x]))
        for y, z in combinations(nb, 2):
            if adj[y] >> z & 1:
                continue
            allowed = full & ~adj[x] & ~(1 << x) | (1 << y) | (1 << z)
            path = _shortest_path(adj, allowed, y, z)
            if path is not None:
                return [x] + path
    return None


def _shortest_path(adj, allowed, src, dst):
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in bits(adj[x] & allowed):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def peo(g: PdGraph) -> List[int]:
    """Deterministic perfect elimination ordering of a chordal graph.

    Raises :class:`NotChordalError` carrying a chordless cycle otherwise.
    """
    _require_undirected(g, "peo")
    order = mcs_order(g)
    if not is_peo(g, order):
        raise NotChordalError(chordless_cycle(g))
    return order


def is_connected(g: PdGraph) -> bool:
    if g.n == 0:
        return True
    full = (1 << g.n) - 1
    return reachable_mask(g.adj_masks(), full, 0) == full


def require_uccg(g: PdGraph, what: str = "operation"):
    """Raise unless ``g`` is undirected, connected and chordal."""
    if not g.is_undirected():
        raise ContractError(f"{what} requires an undirected graph")
    if g.n == 0 or not is_connected(g):
        raise ContractError(f"{what} requires a connected graph")
    order = mcs_order(g)
    if not is_peo(g, order):
        raise NotChordalError(chordless_cycle(g))
