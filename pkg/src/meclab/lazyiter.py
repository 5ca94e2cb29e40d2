"""Enumerate the single-node intervention results of a UCCG incrementally.

Results for root ``v`` are in one-to-one correspondence with the cliques of
``G[ne(v)]``.  The root result (``v`` has no parents) is computed once; every
other result is derived from its predecessor in a depth-first walk over
cliques by moving one child of ``v`` into the parent set and reorienting only
the edges that the move can affect.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from . import _backend, _kernels
from .errors import ContractError, InvariantViolation
from .graph import (
    NodeSet,
    PdGraph,
    bits,
    chain_components,
    from_mask,
    is_chordal,
    reachable_mask,
    require_uccg,
    to_mask,
)


@dataclass(frozen=True)
class InterventionResult:
    """An interventional essential graph for target ``{v}`` and its node partition.

    ``parents`` and ``children`` split ``ne(v)``; ``separated`` holds the nodes
    cut off from ``v`` by the parents, ``rest`` everything else.
    """

    graph: PdGraph
    v: int
    parents: NodeSet
    children: NodeSet
    separated: NodeSet
    rest: NodeSet

    def directed_edge_count(self) -> int:
        return len(self.graph.directed_edges())

    def chain_components(self) -> List[NodeSet]:
        return chain_components(self.graph)


def _state_of(result: InterventionResult):
    n = result.graph.n
    return _kernels._split(list(result.graph.out_masks), n)


def derive_next(result: InterventionResult, u: int, g: PdGraph) -> InterventionResult:
    """Result for parent set ``P + {u}`` built from the result for ``P``.

    ``u`` must be a child of ``v`` adjacent to every current parent.
    """
    adj = g.adj_masks()
    P = to_mask(result.parents)
    C = to_mask(result.children)
    if not C >> u & 1:
        raise ContractError(f"node {u} is not a child of {result.v}")
    if P & ~adj[u]:
        raise ContractError(f"node {u} is not adjacent to every parent of {result.v}")
    S = (1 << g.n) - 1
    state, P2, C2, A2, D2 = _kernels.derive_state(
        adj, S, result.v, _state_of(result), P, C,
        to_mask(result.separated), to_mask(result.rest), u)
    und, _, ch = state
    graph = PdGraph(g.n, [a | b for a, b in zip(und, ch)])
    return InterventionResult(graph, result.v, from_mask(P2), from_mask(C2),
                              from_mask(A2), from_mask(D2))


def lazy_iter(g: PdGraph, v: int, backend: Optional[str] = None) -> List[InterventionResult]:
    """All intervention results for the single-node target ``{v}``.

    One result per clique of ``G[ne(v)]``, the empty clique first; cliques are
    grown only with nodes larger than their current maximum, so each appears
    exactly once.
    """
    require_uccg(g, "lazy_iter")
    if not 0 <= v < g.n:
        raise ContractError(f"node {v} outside 0..{g.n - 1}")
    k = _backend.get(backend)
    rows = k.lazy_results(g.adj_masks(), (1 << g.n) - 1, v)
    return [InterventionResult(PdGraph(g.n, out), v, from_mask(P), from_mask(C),
                               from_mask(A), from_mask(D))
            for out, P, C, A, D in rows]


def check_invariants(result: InterventionResult, g: PdGraph) -> None:
    """Raise :class:`InvariantViolation` unless ``result`` has the structure of a valid result.

    Checks the partition, the separated set, and the four edge-orientation
    properties: no edge from the separated set to anything but parents,
    parents point to children, parents and children point into the rest, and
    the separated set plus parents is undirected.
    """
    r = result.graph
    v = result.v
    adj = g.adj_masks()
    full = (1 << g.n) - 1
    P, C = to_mask(result.parents), to_mask(result.children)
    A, D = to_mask(result.separated), to_mask(result.rest)
    bv = 1 << v

    def fail(msg):
        raise InvariantViolation(f"root {v}, parents {sorted(result.parents)}: {msg}")

    if r.skeleton_edges() != g.skeleton_edges():
        fail("skeleton differs from the base graph")
    if P | C != adj[v] or P & C:
        fail("parents and children do not split ne(v)")
    if bv | P | C | A | D != full or _popcount(bv) + _popcount(P) + _popcount(C) + _popcount(A) + _popcount(D) != g.n:
        fail("node groups do not partition V")
    if any(not r.is_directed_edge(p, v) for p in bits(P)) or \
            any(not r.is_directed_edge(v, c) for c in bits(C)):
        fail("edges at the root do not follow the parent set")
    allowed = full & ~P
    if A != allowed & ~reachable_mask(adj, allowed, v):
        fail("separated set is not the set cut off by the parents")
    if any(adj[a] & (C | D | bv) for a in bits(A)):
        fail("edge between the separated set and children/rest/root")
    for a in bits(P):
        for b in bits(adj[a] & C):
            if not r.is_directed_edge(a, b):
                fail(f"edge {a}-{b} is not directed parent->child")
    for a in bits(P | C):
        for b in bits(adj[a] & D):
            if not r.is_directed_edge(a, b):
                fail(f"edge {a}-{b} is not directed into the rest")
    AP = A | P
    for a in bits(AP):
        for b in bits(adj[a] & AP):
            if not r.is_undirected_edge(a, b):
                fail(f"edge {a}-{b} inside separated+parents is directed")
    for comp in chain_components(r):
        if len(comp) > 1 and not is_chordal(r.induced(comp).skeleton()):
            fail(f"chain component {sorted(comp)} is not chordal")


def _popcount(m):
    return bin(m).count("1")
