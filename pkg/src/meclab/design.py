"""Worst-case single-node experiment design, active and budgeted passive.

Two objectives are supported: ``mec`` minimises the worst-case number of
DAGs left after the interventions, ``edges`` maximises the worst-case number
of directed edges in the resulting interventional essential graph.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from . import _backend
from .counting import CountMemo, _Counter, pick_pivot
from .errors import ContractError, GraphParseError
from .graph import NodesLike, PdGraph, bits, from_mask, require_uccg, to_mask


class Objective(enum.Enum):
    MEC = "mec"
    EDGES = "edges"

    @classmethod
    def parse(cls, value) -> "Objective":
        if isinstance(value, Objective):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ContractError(f"objective must be 'mec' or 'edges', got {value!r}") from None

    def better(self, a, b) -> bool:
        """True when worst-case value ``a`` beats ``b``."""
        return a < b if self is Objective.MEC else a > b


@dataclass
class CostModel:
    costs: List[int]
    budget: int

    def __post_init__(self):
        if self.budget < 0:
            raise ContractError("budget must be nonnegative")
        if any(c < 0 for c in self.costs):
            raise ContractError("costs must be nonnegative")

    @classmethod
    def unit(cls, n: int, budget: int) -> "CostModel":
        return cls([1] * n, budget)

    def cost(self, nodes) -> int:
        return sum(self.costs[x] for x in nodes)


def parse_costs(text: str, n: int, budget: int) -> CostModel:
    """Read ``node cost`` lines; nodes not listed cost 1."""
    costs = [1] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphParseError(f"expected 'node cost', got {raw!r}", lineno)
        try:
            node, cost = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphParseError(f"expected integers, got {raw!r}", lineno) from None
        if not 0 <= node < n:
            raise GraphParseError(f"node {node} outside 0..{n - 1}", lineno)
        if cost < 0:
            raise GraphParseError("cost must be nonnegative", lineno)
        costs[node] = cost
    return CostModel(costs, budget)


@dataclass
class PassiveMemo:
    """Worst-case values keyed by ``(S, T)`` mask pairs."""

    table: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __len__(self):
        return len(self.table)


def active_best_target(g: PdGraph, objective, backend: Optional[str] = None,
                       jobs: int = 1) -> Tuple[int, int]:
    """Single node whose worst-case intervention outcome is best, with that value.

    With ``jobs > 1`` roots are evaluated in worker processes, each with its
    own count memo; the answer is the same as the sequential one.
    """
    obj = Objective.parse(objective)
    require_uccg(g, "active_best_target")
    if g.n < 2:
        raise ContractError("active_best_target needs at least two nodes")
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        args = [(g.adj_masks(), v, obj.value, backend) for v in range(g.n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(_root_worst_case, args))
    else:
        k = _backend.get(backend)
        adj = g.adj_masks()
        counter = _Counter(adj, CountMemo(), k)
        S = (1 << g.n) - 1
        values = [worst_case_for_root(adj, S, v, obj, k, counter) for v in range(g.n)]
    best = None
    for v, val in enumerate(values):
        if best is None or obj.better(val, best[1]):
            best = (v, val)
    return best


def _root_worst_case(args):
    adj, v, kind, backend = args
    k = _backend.get(backend)
    counter = _Counter(adj, CountMemo(), k)
    return worst_case_for_root(adj, (1 << len(adj)) - 1, v, Objective(kind), k, counter)


def worst_case_for_root(adj, S, v, obj, k, counter) -> int:
    rows = k.lazy_components(adj, S, v)
    if obj is Objective.EDGES:
        return min(ndir for ndir, _ in rows)
    worst = 0
    for _, comps in rows:
        size = 1
        for c in comps:
            size *= counter.count(c)
        worst = max(worst, size)
    return worst


class _Passive:
    def __init__(self, adj, obj: Objective, memo: PassiveMemo, kernels, pivot=None):
        self.adj = adj
        self.obj = obj
        self.table = memo.table
        self.k = kernels
        self.pivot = pivot
        self.counter = _Counter(adj, CountMemo(), kernels)

    def value(self, S: int, T: int) -> int:
        mec = self.obj is Objective.MEC
        if S & (S - 1) == 0:
            return 1 if mec else 0
        if T == 0:
            return self.counter.count(S) if mec else 0
        key = (S, T)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        v = self.pivot(self.adj, S, T) if self.pivot else pick_pivot(self.adj, S, T)
        worst = None
        for ndir, comps in self.k.lazy_components(self.adj, S, v):
            if mec:
                val = 1
                for c in comps:
                    val *= self.value(c, T & c)
                if worst is None or val > worst:
                    worst = val
            else:
                val = ndir
                for c in comps:
                    val += self.value(c, T & c)
                if worst is None or val < worst:
                    worst = val
        self.table[key] = worst
        return worst


def passive_value(g: PdGraph, nodes: NodesLike, targets: NodesLike, objective,
                  memo: Optional[PassiveMemo] = None, backend: Optional[str] = None,
                  pivot=None) -> int:
    """Worst case over member DAGs of ``G[nodes]`` when intervening on each target.

    ``pivot(adj, S, T)`` overrides the choice of target to condition on.
    """
    obj = Objective.parse(objective)
    S, T = to_mask(nodes), to_mask(targets)
    if T & ~S:
        raise ContractError("targets must be a subset of the node set")
    memo = memo if memo is not None else PassiveMemo()
    return _Passive(g.adj_masks(), obj, memo, _backend.get(backend), pivot).value(S, T)


def feasible_sets(costs: CostModel, n: int):
    """Target sets within budget, depth-first over sorted nodes, as masks."""
    found = []

    # costs are nonnegative, so the cheapest completion of a branch adds nothing
    def rec(i, mask, spent):
        if i == n:
            found.append(mask)
            return
        rec(i + 1, mask, spent)
        c = costs.costs[i]
        if spent + c <= costs.budget:
            rec(i + 1, mask | (1 << i), spent + c)

    rec(0, 0, 0)
    return found


def passive_best_set(g: PdGraph, costs: CostModel, objective,
                     backend: Optional[str] = None) -> Tuple[FrozenSet[int], int]:
    """Best affordable target set; ties go to lower cost, then the smaller sorted tuple."""
    obj = Objective.parse(objective)
    require_uccg(g, "passive_best_set")
    if len(costs.costs) != g.n:
        raise ContractError("one cost per node is required")
    solver = _Passive(g.adj_masks(), obj, PassiveMemo(), _backend.get(backend))
    S = (1 << g.n) - 1
    best = None
    for T in feasible_sets(costs, g.n):
        val = solver.value(S, T)
        nodes = tuple(bits(T))
        score = (-val if obj is Objective.EDGES else val, costs.cost(nodes), nodes)
        if best is None or score < best[0]:
            best = (score, T, val)
    return from_mask(best[1]), best[2]
