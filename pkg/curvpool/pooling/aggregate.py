"""
Feature aggregation and edge remapping onto the pooled graph.
"""

from typing import Set

import numpy as np

from ..core.errors import ShapeMismatch
from ..core.graph import Edge, FeatureMatrix, Graph, build_graph
from .schemas import Aggregator, PoolAssignment, PooledGraph


def aggregate_features(feats: FeatureMatrix, pools: PoolAssignment, agg: Aggregator) -> FeatureMatrix:
    """Row j of the result is agg applied coordinatewise over the rows of pools[j]."""
    if feats.rows != pools.num_nodes:
        raise ShapeMismatch(
            f"feature matrix has {feats.rows} rows, pool assignment covers {pools.num_nodes} nodes"
        )
    if not pools.pools:
        return FeatureMatrix(np.zeros((0, feats.cols)))

    order = [x for members in pools.pools for x in members]
    sizes = np.array(pools.sizes(), dtype=np.float64)
    starts = np.concatenate(([0], np.cumsum(sizes[:-1]))).astype(np.intp)
    grouped = feats.values[order]

    if agg is Aggregator.SUM:
        out = np.add.reduceat(grouped, starts, axis=0)
    elif agg is Aggregator.AVG:
        out = np.add.reduceat(grouped, starts, axis=0) / sizes[:, None]
    elif agg is Aggregator.MAX:
        out = np.maximum.reduceat(grouped, starts, axis=0)
    else:
        raise ValueError(f"unknown aggregator {agg!r}")
    return FeatureMatrix(out)


def remap_edges(g: Graph, pools: PoolAssignment) -> PooledGraph:
    """One pooled edge per pair of distinct pools joined by at least one original edge."""
    if g.num_nodes != pools.num_nodes:
        raise ShapeMismatch(f"pool assignment covers {pools.num_nodes} nodes, graph has {g.num_nodes}")
    pool_of = pools.pool_of
    pooled: Set[Edge] = set()
    for u, v in g.edges:
        a, b = pool_of[u], pool_of[v]
        if a != b:
            pooled.add((a, b) if a < b else (b, a))
    return PooledGraph(graph=build_graph(len(pools.pools), pooled), origin=pools)
