import random

import pytest

from meclab import GenSpec, PdGraph, gen_chordal
from meclab import _backend
from meclab.oracle import enumerate_mec

DENSITIES = (0.1, 0.2, 0.3, 0.4, 0.5)


def corpus(count, n_lo, n_hi, seed=0):
    """Seeded random connected chordal graphs."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_lo, n_hi)
        out.append(gen_chordal(GenSpec(n, rng.choice(DENSITIES), seed * 100003 + i)))
    return out


def partially_directed(g, rng):
    """A member DAG of ``g`` with a random subset of its arcs left undirected."""
    members = enumerate_mec(g).members
    d = rng.choice(members)
    keep = [e for e in d.directed_edges() if rng.random() < 0.5]
    und = [e for e in d.directed_edges() if e not in keep]
    return PdGraph.from_edges(g.n, undirected=und, directed=keep)


def c4():
    return PdGraph.from_edges(4, undirected=[(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def p3():
    return PdGraph.path(3)


@pytest.fixture
def p5():
    return PdGraph.path(5)


BACKENDS = sorted(_backend.available)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
