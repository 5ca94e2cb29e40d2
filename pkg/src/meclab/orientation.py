"""Meek-rule closure and the non-incremental ways to build intervention results."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from . import _kernels
from .errors import ContractError, CycleError
from .graph import (
    NodesLike,
    PdGraph,
    bits,
    from_mask,
    is_clique_mask,
    require_uccg,
    to_mask,
)


@dataclass
class MeekTrace:
    """Rule applications in firing order, as ``(rule, (a, b))`` meaning a->b."""

    applications: List[Tuple[int, Tuple[int, int]]] = field(default_factory=list)

    def rules_fired(self):
        return sorted({r for r, _ in self.applications})

    def __len__(self):
        return len(self.applications)


def find_directed_cycle(g: PdGraph) -> Optional[List[int]]:
    """Return a directed cycle of ``g`` as a node list, or None."""
    ch = [o & ~i for o, i in zip(g.out_masks, g.in_masks)]
    color = [0] * g.n
    stack_nodes: List[int] = []

    def visit(x):
        color[x] = 1
        stack_nodes.append(x)
        for y in bits(ch[x]):
            if color[y] == 1:
                return stack_nodes[stack_nodes.index(y):]
            if color[y] == 0:
                cyc = visit(y)
                if cyc:
                    return cyc
        stack_nodes.pop()
        color[x] = 2
        return None

    for x in range(g.n):
        if color[x] == 0:
            cyc = visit(x)
            if cyc:
                return cyc
    return None


def meek_closure(g: PdGraph, rng: Optional[random.Random] = None,
                 scope: NodesLike = None) -> Tuple[PdGraph, MeekTrace]:
    """Apply Meek rules R1-R4 until none fires.

    A worklist holds candidate undirected edges; when an edge is oriented the
    edges touching its endpoints and the neighbours of its head are queued
    again.  Passing ``rng`` randomises the scan order, which is used to check
    that the fixpoint does not depend on it.  ``scope`` restricts both the
    edges considered and the evidence to an induced subgraph.
    """
    cyc = find_directed_cycle(g)
    if cyc:
        raise CycleError("directed cycle " + "->".join(map(str, cyc + cyc[:1])))
    n = g.n
    s = (1 << n) - 1 if scope is None else to_mask(scope)
    und, pa, ch = _kernels._split(list(g.out_masks), n)
    adj = [und[a] | pa[a] | ch[a] for a in range(n)]
    trace = MeekTrace()

    queue = [(a, b) for a in bits(s) for b in bits(und[a] & s) if a < b]
    queued = set(queue)
    while queue:
        if rng is not None:
            i = rng.randrange(len(queue))
            queue[i], queue[-1] = queue[-1], queue[i]
        a, b = queue.pop()
        queued.discard((a, b))
        if not und[a] >> b & 1:
            continue
        ends = [(a, b), (b, a)]
        if rng is not None:
            rng.shuffle(ends)
        for x, y in ends:
            rule = _kernels.forcing_rule(und, pa, ch, adj, s, x, y)
            if rule:
                _kernels._orient(und, pa, ch, x, y)
                trace.applications.append((rule, (x, y)))
                touched = (1 << x) | (1 << y) | (adj[y] & s)
                for p in bits(touched):
                    for q in bits(und[p] & s):
                        e = (min(p, q), max(p, q))
                        if e not in queued:
                            queued.add(e)
                            queue.append(e)
                break
    return PdGraph(n, [und[a] | ch[a] for a in range(n)]), trace


def _partition(g: PdGraph, adj, v, P):
    C = adj[v] & ~P
    allowed = ((1 << g.n) - 1) & ~P
    reach = _kernels._reach(adj, allowed, v)
    A = allowed & ~reach
    D = allowed & ~A & ~C & ~(1 << v)
    return C, A, D


def orient_root(g: PdGraph, v: int):
    """Intervention result for ``v`` when ``v`` has no parents."""
    from .lazyiter import InterventionResult

    require_uccg(g, "orient_root")
    _check_node(g, v)
    out = [g.out_masks[x] & ~(1 << v) for x in range(g.n)]
    closed, _ = meek_closure(PdGraph(g.n, out))
    adj = g.adj_masks()
    C, A, D = _partition(g, adj, v, 0)
    return InterventionResult(closed, v, frozenset(), from_mask(C), from_mask(A), from_mask(D))


def eager_intervention_result(g: PdGraph, v: int, parents: NodesLike):
    """Orient every edge at ``v`` per the parent clique, then close the whole graph."""
    from .lazyiter import InterventionResult

    require_uccg(g, "eager_intervention_result")
    _check_node(g, v)
    adj = g.adj_masks()
    P = _check_parent_clique(adj, v, parents)
    out = list(g.out_masks)
    for x in bits(adj[v]):
        if P >> x & 1:
            out[v] &= ~(1 << x)
        else:
            out[x] &= ~(1 << v)
    closed, _ = meek_closure(PdGraph(g.n, out))
    C, A, D = _partition(g, adj, v, P)
    return InterventionResult(closed, v, from_mask(P), from_mask(C), from_mask(A), from_mask(D))


def _check_node(g, v):
    if not 0 <= v < g.n:
        raise ContractError(f"node {v} outside 0..{g.n - 1}")


def _check_parent_clique(adj, v, parents) -> int:
    P = to_mask(parents)
    if P & ~adj[v]:
        raise ContractError(f"parent set {sorted(bits(P))} is not inside ne({v})")
    if not is_clique_mask(adj, P):
        raise ContractError(f"parent set {sorted(bits(P))} is not a clique")
    return P


def lexbfs(g: PdGraph, start: List[int]) -> List[int]:
    """Lexicographic BFS whose first visits are forced to follow ``start``.

    Labels are lists of visit stamps; among unvisited nodes the one with the
    lexicographically largest label wins, ties to the smallest index.  The
    forced prefix must itself be a valid LexBFS prefix for the result to be
    a perfect elimination ordering.
    """
    adj = g.adj_masks()
    labels = {x: [] for x in range(g.n)}
    order: List[int] = []
    visited = 0
    forced = list(start)
    for step in range(g.n):
        if forced:
            x = forced.pop(0)
        else:
            x = max((y for y in range(g.n) if not visited >> y & 1),
                    key=lambda y: (labels[y], -y))
        order.append(x)
        visited |= 1 << x
        for y in bits(adj[x] & ~visited):
            labels[y].append(g.n - step)
    return order


def dag_with_parent_clique(g: PdGraph, v: int, parents: NodesLike) -> PdGraph:
    """A member DAG of the class of ``g`` in which ``pa(v)`` equals ``parents``.

    Edges are oriented from earlier to later along a LexBFS order that starts
    with the parent clique, then ``v``.
    """
    require_uccg(g, "dag_with_parent_clique")
    _check_node(g, v)
    adj = g.adj_masks()
    P = _check_parent_clique(adj, v, parents)
    order = lexbfs(g, sorted(bits(P)) + [v])
    pos = {x: i for i, x in enumerate(order)}
    edges = [(a, b) if pos[a] < pos[b] else (b, a) for a, b in g.skeleton_edges()]
    return PdGraph.from_edges(g.n, directed=edges)
