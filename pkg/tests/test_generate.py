import random

import pytest

from meclab import ContractError, GenSpec, gen_chordal, gen_tree
from meclab.graph import is_chordal, is_connected


def test_single_node():
    g = gen_chordal(GenSpec(1, 1.0, 7))
    assert g.n == 1 and g.edge_count() == 0


def test_full_density_is_complete():
    g = gen_chordal(GenSpec(5, 1.0, 3))
    assert g.edge_count() == 10


def test_example_size():
    g = gen_chordal(GenSpec(8, 0.3, 42))
    assert g.n == 8 and g.edge_count() == 8
    assert is_chordal(g) and is_connected(g)


def test_deterministic():
    assert gen_chordal(GenSpec(15, 0.4, 9)) == gen_chordal(GenSpec(15, 0.4, 9))
    assert gen_chordal(GenSpec(15, 0.4, 9)) != gen_chordal(GenSpec(15, 0.4, 10))


def test_low_density_clamps_to_tree():
    spec = GenSpec(10, 0.01, 1)
    assert spec.target_edges() == 9
    assert gen_chordal(spec).edge_count() == 9


@pytest.mark.parametrize("spec", [GenSpec(0, 0.5), GenSpec(65, 0.5), GenSpec(5, 0.0), GenSpec(5, 1.5)])
def test_rejects_bad_parameters(spec):
    with pytest.raises(ContractError):
        gen_chordal(spec)


def test_thousand_random_specs():
    rng = random.Random(2024)
    for _ in range(1000):
        spec = GenSpec(rng.randint(1, 30), rng.uniform(0.01, 1.0), rng.randrange(10**9))
        g = gen_chordal(spec)
        assert g.n == spec.n and g.is_undirected()
        assert is_chordal(g) and is_connected(g)
        assert g.edge_count() == spec.target_edges()


def test_trees():
    for seed in range(20):
        t = gen_tree(12, seed)
        assert t.edge_count() == 11 and is_connected(t)
