from itertools import combinations

import pytest

from meclab import (ContractError, CostModel, GraphParseError, Objective, PdGraph,
                    active_best_target, parse_costs, passive_best_set, passive_value)
from meclab.counting import pick_pivot
from meclab.design import PassiveMemo, feasible_sets
from meclab.graph import bits
from meclab.oracle import enumerate_mec, oracle_active, oracle_passive_value

from conftest import BACKENDS, corpus


@pytest.mark.parametrize("g,obj,expected", [
    (PdGraph.path(3), "mec", (1, 1)),
    (PdGraph.path(3), "edges", (1, 2)),
    (PdGraph.complete(3), "mec", (0, 2)),
])
def test_active_examples(g, obj, expected):
    assert active_best_target(g, obj) == expected


def test_active_contract():
    with pytest.raises(ContractError):
        active_best_target(PdGraph(1), "mec")
    with pytest.raises(ContractError):
        active_best_target(PdGraph.path(3), "size")


def test_active_parallel_matches_sequential():
    for g in corpus(4, 6, 9, seed=31):
        for obj in ("mec", "edges"):
            assert active_best_target(g, obj, jobs=2) == active_best_target(g, obj)


@pytest.mark.parametrize("targets,expected", [([1], 2), ([], 0)])
def test_passive_value_p3(targets, expected):
    g = PdGraph.path(3)
    assert passive_value(g, range(3), targets, "edges") == expected


def test_passive_value_p5_middle():
    assert passive_value(PdGraph.path(5), range(5), [2], "edges") == 3


def test_passive_value_bases():
    g = PdGraph.path(4)
    assert passive_value(g, range(4), [], "mec") == 4
    assert passive_value(g, [2], [2], "mec") == 1
    assert passive_value(g, [2], [2], "edges") == 0
    with pytest.raises(ContractError):
        passive_value(g, [0, 1], [2], "edges")


@pytest.mark.parametrize("budget,expected", [
    (1, (frozenset({2}), 3)),
    (2, (frozenset({1, 3}), 4)),
])
def test_passive_best_p5(budget, expected):
    assert passive_best_set(PdGraph.path(5), CostModel.unit(5, budget), "edges") == expected


def test_passive_zero_budget():
    assert passive_best_set(PdGraph.path(3), CostModel.unit(3, 0), "edges") == (frozenset(), 0)


def test_passive_costs_steer_choice():
    costs = CostModel([1, 1, 5, 1, 1], 2)
    targets, value = passive_best_set(PdGraph.path(5), costs, "edges")
    assert targets == {1, 3} and value == 4
    costs = CostModel([1, 5, 1, 5, 1], 1)
    assert passive_best_set(PdGraph.path(5), costs, "edges")[0] == {2}


def test_tie_rules():
    g = PdGraph.path(3)
    # {1} and {0, 1} both cost 1 and orient everything; the smaller tuple wins
    assert passive_best_set(g, CostModel([0, 1, 1], 1), "edges") == (frozenset({0, 1}), 2)
    # {1} is cheaper than {0, 2}
    assert passive_best_set(g, CostModel([1, 1, 1], 2), "edges") == (frozenset({1}), 2)


def test_cost_parsing():
    cm = parse_costs("# costs\n0 3\n2 0\n", 3, 4)
    assert cm.costs == [3, 1, 0] and cm.budget == 4
    for bad in ("0\n", "0 x\n", "5 1\n", "0 -1\n"):
        with pytest.raises(GraphParseError):
            parse_costs(bad, 3, 1)
    with pytest.raises(ContractError):
        CostModel.unit(3, -1)


def test_feasible_sets():
    cm = CostModel([1, 2, 1], 2)
    got = sorted(tuple(bits(t)) for t in feasible_sets(cm, 3))
    assert got == [(), (0,), (0, 2), (1,), (2,)]


def test_objective_sense():
    assert Objective.MEC.better(1, 2) and Objective.EDGES.better(3, 2)
    assert Objective.parse("edges") is Objective.EDGES


@pytest.mark.parametrize("backend", BACKENDS)
def test_active_matches_oracle(backend):
    for g in corpus(20, 2, 8, seed=32):
        if g.n < 2:
            continue
        for obj in ("mec", "edges"):
            assert active_best_target(g, obj, backend=backend) == oracle_active(g, obj)


def test_passive_values_match_oracle():
    for g in corpus(12, 2, 7, seed=33):
        members = enumerate_mec(g)
        memo = {"mec": PassiveMemo(), "edges": PassiveMemo()}
        for size in range(3):
            for T in combinations(range(g.n), size):
                for obj in ("mec", "edges"):
                    got = passive_value(g, range(g.n), T, obj, memo=memo[obj])
                    assert got == oracle_passive_value(g, T, obj, members)


def test_active_passive_consistency():
    for g in corpus(12, 2, 8, seed=34):
        if g.n < 2:
            continue
        for obj in ("mec", "edges"):
            _, val = passive_best_set(g, CostModel.unit(g.n, 1), obj)
            assert val == active_best_target(g, obj)[1]


def test_edges_monotone_in_targets():
    for g in corpus(8, 3, 7, seed=35):
        full = range(g.n)
        vals = {T: passive_value(g, full, T, "edges")
                for size in range(g.n + 1) for T in combinations(range(g.n), size)}
        for T, val in vals.items():
            for x in range(g.n):
                if x not in T:
                    assert val <= vals[tuple(sorted(T + (x,)))]


def test_pivot_independence():
    for g in corpus(8, 3, 7, seed=36):
        full = (1 << g.n) - 1
        for T in combinations(range(g.n), 2):
            Tm = sum(1 << t for t in T)
            for obj in ("mec", "edges"):
                ref = passive_value(g, full_nodes(g), T, obj)
                for t in T:
                    forced = lambda adj, S, W, t=t: t if S == full and W == Tm else pick_pivot(adj, S, W)
                    assert passive_value(g, full_nodes(g), T, obj, pivot=forced) == ref
                last = lambda adj, S, W: max(bits(W))
                assert passive_value(g, full_nodes(g), T, obj, pivot=last) == ref


def full_nodes(g):
    return range(g.n)
