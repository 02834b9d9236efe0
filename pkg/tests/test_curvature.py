import math

import pytest

from curvpool.core.curvature import (
    EdgeCurvature,
    bfc_all,
    bfc_edge,
    mean_curvature,
    square_stats,
    triangle_count,
)
from curvpool.core.errors import EdgeNotPresent, IndexOutOfRange
from curvpool.core.graph import build_graph, relabel
from curvpool.datasets.generators import barbell, complete, cycle, erdos_renyi, make_rng, path, star

from oracles import brute_bfc


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_complete_graph_closed_form(n):
    curv = bfc_all(complete(n))
    assert len(curv) == n * (n - 1) // 2
    for value in curv.sorted_values():
        assert value == pytest.approx(n / (n - 1))


def test_triangle_value():
    assert bfc_edge(complete(3), 0, 1) == pytest.approx(1.5)


def test_four_cycle_uses_square_term():
    g = cycle(4)
    stats = square_stats(g, 0, 1)
    assert (stats.sq_i, stats.sq_j, stats.gamma_max) == (1, 1, 1)
    for value in bfc_all(g).sorted_values():
        assert value == pytest.approx(1.0)


@pytest.mark.parametrize("n", [5, 6, 9])
def test_long_cycles_are_flat(n):
    assert all(v == pytest.approx(0.0) for v in bfc_all(cycle(n)).sorted_values())


def test_degree_one_edges_are_zero():
    assert all(v == 0.0 for v in bfc_all(star(6)).sorted_values())
    p = bfc_all(path(5))
    assert p[(0, 1)] == 0.0 and p[(3, 4)] == 0.0


def test_barbell_bridge_is_negative():
    g = barbell(4)
    assert bfc_edge(g, 3, 4) == pytest.approx(-1.0)
    assert bfc_edge(g, 4, 3) == pytest.approx(-1.0)
    assert triangle_count(g, 3, 4) == 0
    assert bfc_edge(g, 0, 1) == pytest.approx(4 / 3)
    assert bfc_edge(g, 0, 3) == pytest.approx(5 / 6)


def test_missing_edges_and_bad_indices():
    g = path(4)
    with pytest.raises(EdgeNotPresent):
        bfc_edge(g, 0, 2)
    with pytest.raises(IndexOutOfRange):
        bfc_edge(g, 0, 9)
    with pytest.raises(KeyError):
        square_stats(g, 0, 3)


def test_matches_brute_force_on_random_graphs():
    rng = make_rng(2024)
    checked = 0
    for seed in range(1000):
        n = int(rng.integers(2, 9))
        g = erdos_renyi(n, 0.4, seed=seed)
        curv = bfc_all(g)
        assert len(curv) == g.num_edges
        for (u, v), value in curv.items():
            assert value == pytest.approx(brute_bfc(g, u, v), abs=1e-12)
            checked += 1
    assert checked > 1000


def test_curvature_is_symmetric_and_bounded():
    for seed in range(50):
        g = erdos_renyi(10, 0.5, seed=seed)
        for u, v in g.edges:
            value = bfc_edge(g, u, v)
            assert value == bfc_edge(g, v, u)
            assert math.isfinite(value)
            assert value >= -2.0


def test_permutation_equivariance():
    g = erdos_renyi(9, 0.45, seed=11)
    perm = [3, 7, 0, 8, 1, 5, 2, 6, 4]
    h = relabel(g, perm)
    before = bfc_all(g)
    after = bfc_all(h)
    for (u, v), value in before.items():
        assert after[(perm[u], perm[v])] == pytest.approx(value, abs=1e-12)


def test_precomputed_neighbor_sets_give_same_values():
    g = erdos_renyi(12, 0.3, seed=5)
    assert bfc_all(g, g.neighbor_sets).values == bfc_all(g).values


def test_edge_curvature_container():
    curv = EdgeCurvature({(0, 1): 0.5, (1, 2): -0.25})
    assert curv[(1, 0)] == 0.5
    assert (2, 1) in curv
    assert (0, 2) not in curv
    assert mean_curvature(curv) == pytest.approx(0.125)
    assert mean_curvature(bfc_all(build_graph(3, []))) is None


def test_barbell_mean_curvature():
    assert mean_curvature(bfc_all(barbell(4))) == pytest.approx(12 / 13)


FIXTURES = (
    [complete(n) for n in range(3, 7)]
    + [cycle(n) for n in range(3, 9)]
    + [path(n) for n in range(2, 7)]
    + [barbell(k) for k in range(3, 6)]
    + [star(n) for n in range(3, 7)]
)


@pytest.mark.parametrize("g", FIXTURES, ids=lambda g: f"n{g.num_nodes}-m{g.num_edges}")
def test_fixtures_match_brute_force(g):
    for (u, v), value in bfc_all(g).items():
        assert value == pytest.approx(brute_bfc(g, u, v), abs=1e-12)


def test_disconnected_graph_is_union_of_components():
    for seed in range(30):
        left = erdos_renyi(8, 0.4, seed=seed)
        right = erdos_renyi(7, 0.5, seed=seed + 100)
        shift = left.num_nodes
        union = build_graph(shift + right.num_nodes, list(left.edges) + [(u + shift, v + shift) for u, v in right.edges])
        expected = dict(bfc_all(left).items())
        expected.update({(u + shift, v + shift): value for (u, v), value in bfc_all(right).items()})
        assert bfc_all(union).values == expected
