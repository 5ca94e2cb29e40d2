"""Size of a Markov equivalence class by recursive sum-product over intervention results.

For a UCCG and any node ``v``, every member DAG falls in exactly one
interventional class for target ``{v}``, and each class has as many members
as the product of the class sizes of its chain components.  The recursion is
memoised on the node set of the component.
"""
from __future__ import annotations

from typing import Dict, Optional

from . import _backend
from .errors import ContractError, CycleError, NotChordalError
from .graph import (
    NodesLike,
    PdGraph,
    bits,
    chain_components,
    chordless_cycle,
    is_chordal,
    require_uccg,
    to_mask,
)
from .orientation import find_directed_cycle


class CountMemo:
    """Class sizes keyed by node-set mask, for one fixed base graph."""

    def __init__(self):
        self.table: Dict[int, int] = {}

    def __contains__(self, nodes):
        return to_mask(nodes) in self.table

    def __getitem__(self, nodes):
        return self.table[to_mask(nodes)]

    def __len__(self):
        return len(self.table)


def pick_pivot(adj, S, within=None):
    """Node of maximum degree in ``G[S]`` among ``within`` (default S), ties to smallest."""
    best, best_deg = -1, -1
    for x in bits(S if within is None else within):
        d = bin(adj[x] & S).count("1")
        if d > best_deg:
            best, best_deg = x, d
    return best


class _Counter:
    def __init__(self, adj, memo: CountMemo, kernels, pivot=None):
        self.adj = adj
        self.table = memo.table
        self.k = kernels
        self.pivot = pivot

    def count(self, S: int) -> int:
        if S & (S - 1) == 0:
            return 1
        hit = self.table.get(S)
        if hit is not None:
            return hit
        v = self.pivot(self.adj, S) if self.pivot else pick_pivot(self.adj, S)
        total = 0
        for _, comps in self.k.lazy_components(self.adj, S, v):
            prod = 1
            for c in comps:
                prod *= self.count(c)
            total += prod
        self.table[S] = total
        return total


def mec_count_uccg(g: PdGraph, nodes: NodesLike = None, memo: Optional[CountMemo] = None,
                   backend: Optional[str] = None, pivot=None) -> int:
    """Number of DAGs in the class of the UCCG ``G[nodes]``.

    ``pivot(adj, S)`` overrides the root choice; the count does not depend on it.
    """
    S = (1 << g.n) - 1 if nodes is None else to_mask(nodes)
    sub = g.induced(S)
    if not sub.is_undirected():
        raise ContractError("mec_count_uccg requires an undirected induced subgraph")
    if S:
        require_uccg(_compact(sub, S), "mec_count_uccg")
    memo = memo if memo is not None else CountMemo()
    return _Counter(g.adj_masks(), memo, _backend.get(backend), pivot).count(S)


def _compact(g: PdGraph, S: int) -> PdGraph:
    idx = {x: i for i, x in enumerate(bits(S))}
    edges = [(idx[a], idx[b]) for a, b in g.skeleton_edges()]
    return PdGraph.from_edges(len(idx), undirected=edges)


def mec_count(g: PdGraph, backend: Optional[str] = None) -> int:
    """Number of DAGs represented by a chain graph with chordal chain components."""
    cyc = find_directed_cycle(g)
    if cyc:
        raise CycleError("directed cycle " + "->".join(map(str, cyc + cyc[:1])))
    und_only = PdGraph(g.n, [o & i for o, i in zip(g.out_masks, g.in_masks)])
    memo = CountMemo()
    k = _backend.get(backend)
    adj = und_only.adj_masks()
    counter = _Counter(adj, memo, k)
    total = 1
    for comp in chain_components(g):
        if len(comp) == 1:
            continue
        S = to_mask(comp)
        part = und_only.induced(S)
        if not is_chordal(part):
            raise NotChordalError(chordless_cycle(part))
        total *= counter.count(S)
    return total
