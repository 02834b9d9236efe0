import numpy as np
import pytest

from curvpool.core.errors import IndexOutOfRange, InvariantViolation, SelfLoopRejected, ShapeMismatch
from curvpool.core.graph import (
    FeatureMatrix,
    Graph,
    build_graph,
    common_neighbors,
    degree,
    induced_connected,
    relabel,
)
from curvpool.datasets.generators import barbell, complete, erdos_renyi


def test_build_graph_dedups_and_symmetrizes():
    g = build_graph(4, [(1, 0), (0, 1), (2, 1), (3, 2)])
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.adjacency == ((1,), (0, 2), (1, 3), (2,))
    assert g.num_edges == 3
    g.validate()


def test_build_graph_rejects_bad_input():
    with pytest.raises(IndexOutOfRange):
        build_graph(3, [(0, 3)])
    with pytest.raises(IndexOutOfRange):
        build_graph(3, [(-1, 0)])
    with pytest.raises(SelfLoopRejected):
        build_graph(3, [(1, 1)])


def test_empty_and_isolated_graphs():
    g = build_graph(0, [])
    assert g.num_nodes == 0 and g.edges == ()
    h = build_graph(3, [])
    assert h.degrees == [0, 0, 0]


def test_graph_rejects_inconsistent_adjacency():
    with pytest.raises(InvariantViolation):
        Graph(num_nodes=2, adjacency=((1,),))
    asymmetric = Graph(num_nodes=2, adjacency=((1,), ()))
    with pytest.raises(InvariantViolation):
        asymmetric.validate()


def test_degree_and_common_neighbors():
    g = barbell(4)
    assert degree(g, 3) == 4
    assert degree(g, 0) == 3
    assert common_neighbors(g, 0, 1) == [2, 3]
    assert common_neighbors(g, 3, 4) == []
    with pytest.raises(IndexOutOfRange):
        degree(g, 8)


def test_common_neighbors_matches_set_intersection():
    g = erdos_renyi(12, 0.5, seed=7)
    for i in range(g.num_nodes):
        for j in range(g.num_nodes):
            expected = sorted(set(g.adjacency[i]) & set(g.adjacency[j]))
            assert common_neighbors(g, i, j) == expected


def test_induced_connected():
    g = barbell(3)
    assert induced_connected(g, [0, 1, 2])
    assert induced_connected(g, [2, 3])
    assert not induced_connected(g, [0, 4])
    assert not induced_connected(g, [])


def test_relabel_preserves_structure():
    g = barbell(3)
    perm = [5, 4, 3, 2, 1, 0]
    h = relabel(g, perm)
    assert h.num_edges == g.num_edges
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges)
    with pytest.raises(InvariantViolation):
        relabel(g, [0, 0, 1, 2, 3, 4])


def test_feature_matrix_invariants():
    f = FeatureMatrix.from_rows([[1, 2], [3, 4]])
    assert (f.rows, f.cols) == (2, 2)
    assert f.values.dtype == np.float64
    with pytest.raises(ValueError):
        f.values[0, 0] = 9.0
    with pytest.raises(ShapeMismatch):
        FeatureMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeMismatch):
        FeatureMatrix(np.zeros(3))
    with pytest.raises(InvariantViolation):
        FeatureMatrix.from_rows([[1.0], [float("nan")]])


def test_feature_matrix_take_and_pairing():
    f = FeatureMatrix.from_rows([[1.0], [2.0], [3.0]])
    assert f.take([2, 0, 1]) == FeatureMatrix.from_rows([[3.0], [1.0], [2.0]])
    f.check_pairs_with(complete(3))
    with pytest.raises(ShapeMismatch):
        f.check_pairs_with(complete(4))
