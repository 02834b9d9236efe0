import pytest

from curvpool.core.config import Config, set_config, get_config
from curvpool.core.errors import InvalidSpec
from curvpool.datasets.generators import (
    CavemanSpec,
    artificial_dataset,
    artificial_specs,
    barbell,
    caveman,
    erdos_renyi,
    star,
)
from oracles import components


@pytest.mark.parametrize("l,k", [(2, 3), (3, 4), (4, 5), (7, 6)])
def test_caveman_shape(l, k):
    g = caveman(CavemanSpec(num_cliques=l, clique_size=k, seed=42))
    g.validate()
    assert g.num_nodes == l * k
    assert g.num_edges == l * k * (k - 1) // 2
    assert set(g.degrees) == {k - 1}
    assert len(components(g.num_nodes, g.edges)) == 1


def test_caveman_has_one_bridge_per_clique():
    l, k = 5, 4
    g = caveman(CavemanSpec(num_cliques=l, clique_size=k, seed=1))
    crossing = [(u, v) for u, v in g.edges if u // k != v // k]
    assert len(crossing) == l
    inside = [(u, v) for u, v in g.edges if u // k == v // k]
    assert len(inside) == l * (k * (k - 1) // 2 - 1)


def test_caveman_is_deterministic_per_seed():
    spec = CavemanSpec(num_cliques=6, clique_size=5, seed=123)
    assert caveman(spec) == caveman(spec)
    others = {caveman(CavemanSpec(num_cliques=6, clique_size=5, seed=s)).edges for s in range(10)}
    assert len(others) > 1


def test_caveman_spec_validation():
    with pytest.raises(InvalidSpec):
        CavemanSpec(num_cliques=1, clique_size=4)
    with pytest.raises(InvalidSpec):
        CavemanSpec(num_cliques=3, clique_size=2)
    with pytest.raises(InvalidSpec):
        CavemanSpec(num_cliques=3, clique_size=4, seed=-1)
    with pytest.raises(InvalidSpec):
        CavemanSpec(num_cliques=3, clique_size=4, seed=2**64)


def test_fixture_generators():
    assert barbell(3).edges == ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5))
    assert star(4).degrees == [3, 1, 1, 1]
    assert erdos_renyi(6, 0.0).num_edges == 0
    assert erdos_renyi(6, 1.0).num_edges == 15
    assert erdos_renyi(10, 0.3, seed=4) == erdos_renyi(10, 0.3, seed=4)
    with pytest.raises(InvalidSpec):
        erdos_renyi(5, 1.5)
    with pytest.raises(InvalidSpec):
        barbell(2)


def test_artificial_dataset_classes():
    data = artificial_dataset(10, seed=7)
    assert [label for _, label in data] == [0, 1] * 5
    for g, label in data:
        degree = g.degrees[0]
        if label == 0:
            assert 5 <= degree <= 7 and 12 <= g.num_nodes <= 32
        else:
            assert 2 <= degree <= 4 and 15 <= g.num_nodes <= 40


def test_artificial_specs_are_prefix_stable():
    short = artificial_specs(3, seed=99)
    longer = artificial_specs(8, seed=99)
    assert longer[:3] == short
    assert artificial_specs(0, seed=99) == []


def test_rng_algorithm_is_pinned():
    with pytest.raises(ValueError):
        Config(CURVPOOL_RNG_ALGORITHM="MT19937")
    original = get_config()
    try:
        set_config(Config(CURVPOOL_RNG_ALGORITHM="pcg64"))
        assert get_config().rng_algorithm == "PCG64"
    finally:
        set_config(original)
