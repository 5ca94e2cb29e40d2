import pytest
from hypothesis import given, settings, strategies as st

from meclab import GenSpec, GraphParseError, NotChordalError, PdGraph, gen_chordal
from meclab.errors import ContractError
from meclab.graph import (
    bits,
    chain_components,
    chordless_cycle,
    format_graph,
    from_mask,
    is_chordal,
    is_clique,
    is_connected,
    is_peo,
    mcs_order,
    parse_graph,
    peo,
    require_uccg,
    to_mask,
    unreachable_from,
    v_structures,
)

from conftest import c4


def test_masks_round_trip():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert to_mask([0, 3]) == 0b1001
    assert from_mask(0b1001) == frozenset({0, 3})


def test_parse_mixed_graph():
    g = parse_graph("4\n0 1\n1 -> 2  # arc\n\n2 3\n")
    assert g.undirected_edges() == [(0, 1), (2, 3)]
    assert g.directed_edges() == [(1, 2)]
    assert g.parents(2) == {1} and g.children(1) == {2}
    assert g.neighbors(2) == {3} and g.adjacent(2) == {1, 3}


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("x\n", 1),
    ("3\n0 5\n", 2),
    ("3\n1 1\n", 2),
    ("3\n0 1 2\n", 2),
    ("3\n0 1\n0 -> 1\n", 3),
    ("3\n0 -> 1\n1 -> 0\n", 3),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_repeated_edge_is_not_an_error():
    assert parse_graph("2\n0 1\n1 0\n") == PdGraph.path(2)


def test_format_sorted_and_round_trips():
    g = PdGraph.from_edges(4, undirected=[(2, 3), (0, 1)], directed=[(1, 2)])
    text = format_graph(g)
    assert text == "4\n0 1\n1 -> 2\n2 3\n"
    assert parse_graph(text) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.floats(0.01, 1.0), st.integers(0, 10**6))
def test_format_parse_inverse(n, r, seed):
    g = gen_chordal(GenSpec(n, r, seed))
    assert parse_graph(format_graph(g)) == g


def test_graph_validation():
    with pytest.raises(ContractError):
        PdGraph(2, [0b01, 0])
    with pytest.raises(ContractError):
        PdGraph(2, [0b100, 0])
    with pytest.raises(ContractError):
        PdGraph(65)
    with pytest.raises(ContractError):
        PdGraph.from_edges(2, undirected=[(0, 1)], directed=[(1, 0)])


def test_equality_and_hash():
    a = PdGraph.from_edges(3, undirected=[(0, 1), (1, 2)])
    assert a == PdGraph.path(3) and hash(a) == hash(PdGraph.path(3))
    assert a != PdGraph.from_edges(3, undirected=[(0, 1)], directed=[(1, 2)])


def test_induced_keeps_indices():
    g = PdGraph.complete(4).induced([1, 3])
    assert g.n == 4
    assert g.skeleton_edges() == [(1, 3)]


def test_chain_components():
    g = PdGraph.from_edges(5, undirected=[(0, 1), (3, 4)], directed=[(1, 2), (2, 3)])
    assert chain_components(g) == [{0, 1}, {2}, {3, 4}]


def test_unreachable_from():
    g = PdGraph.path(5)
    assert unreachable_from(g, 0, [2]) == {3, 4}
    assert unreachable_from(g, 0) == frozenset()


def test_v_structures():
    d = PdGraph.from_edges(4, directed=[(0, 2), (1, 2), (2, 3)])
    assert v_structures(d) == {(0, 2, 1)}
    with pytest.raises(ContractError):
        v_structures(PdGraph.path(3))


def test_clique_checks():
    g = PdGraph.complete(4)
    assert is_clique(g, [0, 1, 2]) and is_clique(g, []) and not is_clique(PdGraph.path(3), [0, 2])


def test_chordality():
    assert is_chordal(PdGraph.complete(5))
    assert not is_chordal(c4())
    assert chordless_cycle(c4()) == [0, 1, 2, 3]
    with pytest.raises(NotChordalError) as info:
        peo(c4())
    assert info.value.witness == [0, 1, 2, 3]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 16), st.floats(0.01, 1.0), st.integers(0, 10**6))
def test_generated_graphs_have_peo(n, r, seed):
    g = gen_chordal(GenSpec(n, r, seed))
    order = mcs_order(g)
    assert sorted(order) == list(range(n))
    assert is_peo(g, order) and is_peo(g, peo(g))
    assert chordless_cycle(g) is None


def test_chordless_cycle_is_a_real_hole():
    # six-cycle with one chord leaves a chordless four-cycle
    g = PdGraph.from_edges(6, undirected=[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    cyc = chordless_cycle(g)
    assert len(cyc) == 4
    k = len(cyc)
    for i in range(k):
        assert g.is_adjacent(cyc[i], cyc[(i + 1) % k])
        for j in range(i + 2, k):
            if (i, j) != (0, k - 1):
                assert not g.is_adjacent(cyc[i], cyc[j])


def test_require_uccg():
    require_uccg(PdGraph.path(4))
    with pytest.raises(ContractError):
        require_uccg(PdGraph.from_edges(3, undirected=[(0, 1)]))
    with pytest.raises(ContractError):
        require_uccg(PdGraph.from_edges(2, directed=[(0, 1)]))
    with pytest.raises(NotChordalError):
        require_uccg(c4())
    assert not is_connected(PdGraph(2))
