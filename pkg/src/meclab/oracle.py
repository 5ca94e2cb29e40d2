"""Brute-force reference answers for small graphs.

Nothing here touches the orientation, lazyiter or kernel code paths: member
DAGs are enumerated edge by edge and interventional equivalence is decided
straight from its definition (same v-structures, and the same skeleton of
every intervention graph, where the intervention graph for target ``I``
drops every edge pointing into ``I``).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .errors import ContractError, OracleCapError
from .graph import PdGraph

DEFAULT_CAP = 12

Arcs = FrozenSet[Tuple[int, int]]


def oracle_cap() -> int:
    raw = os.environ.get("MECLAB_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _check_cap(g: PdGraph):
    cap = oracle_cap()
    if g.n > cap:
        raise OracleCapError(f"oracle is capped at {cap} nodes, got {g.n} (set MECLAB_ORACLE_CAP)")


@dataclass
class MecEnumeration:
    base: PdGraph
    members: List[PdGraph]

    def __len__(self):
        return len(self.members)

    def arcs(self) -> List[Arcs]:
        return [frozenset(m.directed_edges()) for m in self.members]


def _edge_list(g: PdGraph):
    return sorted(g.skeleton_edges())


def _adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def enumerate_mec(g: PdGraph) -> MecEnumeration:
    """Every acyclic, collider-free orientation of the undirected graph ``g``."""
    _check_cap(g)
    if not g.is_undirected():
        raise ContractError("enumerate_mec requires an undirected graph")
    n = g.n
    edges = _edge_list(g)
    adj = _adjacency(n, edges)
    parents = [set() for _ in range(n)]
    children = [set() for _ in range(n)]
    found: List[PdGraph] = []

    def reaches(src, dst):
        stack, seen = [src], {src}
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            for y in children[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def ok(a, b):
        # adding a -> b: no collider at b, no cycle
        if any(c not in adj[a] for c in parents[b]):
            return False
        return not reaches(b, a)

    def rec(i):
        if i == len(edges):
            arcs = [(a, b) for a in range(n) for b in sorted(children[a])]
            found.append(PdGraph.from_edges(n, directed=arcs))
            return
        a, b = edges[i]
        for x, y in ((a, b), (b, a)):
            if ok(x, y):
                children[x].add(y)
                parents[y].add(x)
                rec(i + 1)
                children[x].discard(y)
                parents[y].discard(x)

    rec(0)
    return MecEnumeration(g, found)


def _v_structures(n, arcs) -> FrozenSet[Tuple[int, int, int]]:
    pa = [set() for _ in range(n)]
    adj = [set() for _ in range(n)]
    for a, b in arcs:
        pa[b].add(a)
        adj[a].add(b)
        adj[b].add(a)
    out = set()
    for b in range(n):
        for a, c in combinations(sorted(pa[b]), 2):
            if c not in adj[a]:
                out.add((a, b, c))
    return frozenset(out)


def _intervention_skeleton(arcs, target) -> FrozenSet[FrozenSet[int]]:
    return frozenset(frozenset(e) for e in arcs if e[1] not in target)


def equivalence_signature(n, arcs, family: Iterable[Iterable[int]]):
    """Key that is equal for two DAGs exactly when they are interventionally equivalent."""
    targets = [frozenset()] + sorted({frozenset(t) for t in family}, key=sorted)
    return (_v_structures(n, arcs),) + tuple(_intervention_skeleton(arcs, t) for t in targets)


def _union_graph(n, arc_sets) -> PdGraph:
    pairs = set()
    for arcs in arc_sets:
        pairs |= arcs
    return PdGraph.from_edges(
        n,
        undirected=[(a, b) for a, b in pairs if a < b and (b, a) in pairs],
        directed=[(a, b) for a, b in pairs if (b, a) not in pairs],
    )


def equivalence_classes(members: MecEnumeration, family) -> Dict[tuple, List[int]]:
    """Group member indices by interventional equivalence under ``family``."""
    n = members.base.n
    classes: Dict[tuple, List[int]] = {}
    for i, arcs in enumerate(members.arcs()):
        classes.setdefault(equivalence_signature(n, arcs, family), []).append(i)
    return classes


def i_essential(d: PdGraph, family, members: MecEnumeration) -> PdGraph:
    """Union of all members interventionally equivalent to ``d`` under ``family``."""
    n = members.base.n
    all_arcs = members.arcs()
    mine = frozenset(d.directed_edges())
    if mine not in set(all_arcs):
        raise ContractError("DAG is not a member of the enumeration")
    key = equivalence_signature(n, mine, family)
    same = [a for a in all_arcs if equivalence_signature(n, a, family) == key]
    return _union_graph(n, same)


def essential_graphs(members: MecEnumeration, family) -> Dict[int, PdGraph]:
    """Interventional essential graph of every member, by member index."""
    n = members.base.n
    all_arcs = members.arcs()
    out = {}
    for idxs in equivalence_classes(members, family).values():
        union = _union_graph(n, [all_arcs[i] for i in idxs])
        for i in idxs:
            out[i] = union
    return out


def result_space(g: PdGraph, v: int) -> set:
    """Set of distinct interventional essential graphs for target ``{v}``."""
    members = enumerate_mec(g)
    return set(essential_graphs(members, [[v]]).values())


def oracle_count(g: PdGraph) -> int:
    """Number of member DAGs of a chain graph, by enumeration per chain component."""
    _check_cap(g)
    und = g.undirected_edges()
    adj = _adjacency(g.n, und)
    seen, total = set(), 1
    for s in range(g.n):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        if len(comp) > 1:
            sub = PdGraph.from_edges(g.n, undirected=[(a, b) for a, b in und if a in comp])
            total *= len(enumerate_mec(sub))
    return total


def _objective_values(members: MecEnumeration, targets: Sequence[int], kind: str):
    family = [[t] for t in targets]
    classes = equivalence_classes(members, family)
    n = members.base.n
    all_arcs = members.arcs()
    if kind == "mec":
        return [len(idxs) for idxs in classes.values()]
    return [len(_union_graph(n, [all_arcs[i] for i in idxs]).directed_edges())
            for idxs in classes.values()]


def oracle_passive_value(g: PdGraph, targets: Iterable[int], kind: str, members=None):
    """Worst case over members: fewest directed edges, or largest class size."""
    members = members or enumerate_mec(g)
    vals = _objective_values(members, sorted(targets), kind)
    return max(vals) if kind == "mec" else min(vals)


def oracle_active(g: PdGraph, kind: str, members=None) -> Tuple[int, int]:
    """Best single node and its worst-case value (ties to the smallest node)."""
    members = members or enumerate_mec(g)
    best = None
    for v in range(g.n):
        val = oracle_passive_value(g, [v], kind, members)
        if best is None or (val < best[1] if kind == "mec" else val > best[1]):
            best = (v, val)
    return best


def oracle_passive_best(g: PdGraph, costs: Sequence[int], budget: int, kind: str,
                        members=None) -> Tuple[FrozenSet[int], int]:
    """Exhaustive budgeted target-set search with the same tie rules as the main path."""
    members = members or enumerate_mec(g)
    best = None
    for size in range(g.n + 1):
        for T in combinations(range(g.n), size):
            cost = sum(costs[t] for t in T)
            if cost > budget:
                continue
            val = oracle_passive_value(g, T, kind, members)
            score = (-val if kind == "edges" else val, cost, T)
            if best is None or score < best[0]:
                best = (score, T, val)
    return frozenset(best[1]), best[2]
