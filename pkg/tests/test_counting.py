import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from meclab import (ContractError, CountMemo, CycleError, GenSpec, NotChordalError, PdGraph,
                    gen_chordal, gen_tree, mec_count, mec_count_uccg)
from meclab.counting import pick_pivot
from meclab.graph import bits
from meclab.oracle import enumerate_mec, oracle_count

from conftest import BACKENDS, c4, corpus


@pytest.mark.parametrize("g,expected", [
    (PdGraph.complete(3), 6),
    (PdGraph.path(3), 3),
    (PdGraph.star(3), 4),
    (PdGraph.path(5), 5),
    (PdGraph(0), 1),
    (PdGraph(1), 1),
])
def test_small_counts(g, expected):
    assert mec_count(g) == expected


def test_chain_graph_inputs():
    assert mec_count(PdGraph.from_edges(3, directed=[(0, 1), (1, 2)])) == 1
    two_paths = PdGraph.from_edges(6, undirected=[(0, 1), (1, 2), (3, 4), (4, 5)])
    assert mec_count(two_paths) == 9
    mixed = PdGraph.from_edges(5, undirected=[(1, 2), (2, 3)], directed=[(0, 1), (0, 4)])
    assert mec_count(mixed) == 3


def test_errors():
    with pytest.raises(NotChordalError) as info:
        mec_count(c4())
    assert info.value.witness == [0, 1, 2, 3]
    with pytest.raises(CycleError):
        mec_count(PdGraph.from_edges(3, directed=[(0, 1), (1, 2), (2, 0)]))
    with pytest.raises(ContractError):
        mec_count_uccg(PdGraph.from_edges(3, undirected=[(0, 1)]))


def test_subset_and_memo():
    g = PdGraph.path(5)
    memo = CountMemo()
    assert mec_count_uccg(g, [1, 2, 3], memo=memo) == 3
    assert [1, 2, 3] in memo and memo[[1, 2, 3]] == 3
    assert mec_count_uccg(g, [1, 2, 3], memo=memo) == 3


def test_warm_memo_gives_same_values():
    for g in corpus(10, 5, 10, seed=21):
        memo = CountMemo()
        first = mec_count_uccg(g, memo=memo)
        assert len(memo) > 0
        assert mec_count_uccg(g, memo=memo) == first
        for key, value in list(memo.table.items()):
            assert mec_count_uccg(g, list(bits(key))) == value


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graph_factorial(n):
    assert mec_count(PdGraph.complete(n)) == math.factorial(n)


def test_trees_count_nodes():
    for seed in range(20):
        n = 2 + seed % 11
        assert mec_count(gen_tree(n, seed)) == n


def test_pivot_rule():
    g = PdGraph.star(3)
    assert pick_pivot(g.adj_masks(), 0b1111) == 0
    assert pick_pivot(g.adj_masks(), 0b1110) == 1
    assert pick_pivot(g.adj_masks(), 0b1111, within=0b1100) == 2


def test_pivot_independence():
    for g in corpus(12, 3, 8, seed=22):
        full = (1 << g.n) - 1
        expected = oracle_count(g)
        for v in range(g.n):
            top = lambda adj, S, v=v: v if S == full else pick_pivot(adj, S)
            assert mec_count_uccg(g, pivot=top) == expected
        rng = random.Random(g.n)
        anywhere = lambda adj, S: rng.choice(list(bits(S)))
        assert mec_count_uccg(g, pivot=anywhere) == expected


@pytest.mark.parametrize("backend", BACKENDS)
def test_matches_oracle(backend):
    for g in corpus(30, 2, 9, seed=23):
        assert mec_count(g, backend=backend) == len(enumerate_mec(g))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 9), st.floats(0.05, 1.0), st.integers(0, 10**6))
def test_matches_oracle_property(n, r, seed):
    g = gen_chordal(GenSpec(n, r, seed))
    assert mec_count(g) == oracle_count(g)


def test_large_counts_are_exact():
    # three disjoint K10 blocks: the count exceeds 2**64
    edges = [(a + o, b + o) for o in (0, 10, 20) for a in range(10) for b in range(a + 1, 10)]
    g = PdGraph.from_edges(30, undirected=edges)
    assert mec_count(g) == math.factorial(10) ** 3 > 2 ** 64
