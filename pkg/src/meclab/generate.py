"""Seeded random connected chordal graphs with a target edge density.

Construction: draw a uniform random vertex order and add vertices one at a
time, joining each to ``k`` nodes of one maximal clique of the graph built
so far.  Every vertex therefore sees a clique among its earlier neighbours,
so the order is a perfect elimination ordering and the graph is chordal;
``k >= 1`` keeps it connected.  ``k`` is drawn around the mean number of
edges still owed per remaining vertex and clamped to the range that keeps
the exact target reachable: joining a full largest clique grows the clique
number by one, which bounds what later vertices can still add.

Randomness comes only from :class:`random.Random` seeded with the spec seed
(Mersenne Twister), so a given ``(n, r, seed)`` always yields the same graph.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from .errors import ContractError
from .graph import MAX_NODES, PdGraph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenSpec:
    n: int
    r: float
    seed: int = 0

    def target_edges(self) -> int:
        top = self.n * (self.n - 1) // 2
        want = int(round(self.r * top))
        return min(max(want, self.n - 1), top)


def gen_chordal(spec: GenSpec) -> PdGraph:
    n, r = spec.n, spec.r
    if not 1 <= n <= MAX_NODES:
        raise ContractError(f"n must be in 1..{MAX_NODES}")
    if not 0 < r <= 1:
        raise ContractError("density must be in (0, 1]")
    rng = random.Random(spec.seed)
    m = spec.target_edges()
    if m > int(round(r * n * (n - 1) / 2)):
        log.info("density %.3f too low for a connected graph on %d nodes; using %d edges", r, n, m)

    order = list(range(n))
    rng.shuffle(order)
    out = [0] * n
    cliques = [[order[0]]]  # maximal cliques so far, as sorted lists
    omega = 1
    owed = m
    for pos in range(1, n):
        x = order[pos]
        left = n - pos  # vertices still to place, x included
        hi = min(omega, owed - (left - 1))
        # later vertices can add at most this many edges if x skips the largest clique
        later_max = (left - 1) * omega + (left - 1) * (left - 2) // 2
        lo = min(max(1, owed - later_max), omega)
        mean = owed / left
        k = int(round(rng.gauss(mean, max(1.0, mean / 2))))
        k = min(max(k, lo), hi)
        if k == omega:
            q = rng.choice([c for c in cliques if len(c) == omega])
        else:
            q = rng.choice([c for c in cliques if len(c) >= k])
        picked = sorted(rng.sample(q, k))
        for y in picked:
            out[x] |= 1 << y
            out[y] |= 1 << x
        if k == len(q):
            cliques.remove(q)
        cliques.append(sorted(picked + [x]))
        omega = max(omega, k + 1)
        owed -= k
    return PdGraph(n, out)


def gen_tree(n: int, seed: int = 0) -> PdGraph:
    """Uniform-attachment random tree: node i joins a random earlier node."""
    rng = random.Random(seed)
    return PdGraph.from_edges(n, undirected=[(rng.randrange(i), i) for i in range(1, n)])
