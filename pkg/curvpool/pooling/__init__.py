"""Curvature-threshold pooling.

Modules:
- schemas: strategies, aggregators, pool assignments, pooled graphs
- candidates: curvature criteria -> candidate pairs
- merge: union-find overlap merge
- aggregate: feature aggregation and edge remapping
- pipeline: single-step and hierarchical CurvPool
"""

from .aggregate import aggregate_features, remap_edges
from .candidates import candidate_pairs, threshold_pairs
from .merge import UnionFind, merge_pools
from .pipeline import PoolingStep, coarsen, compose_assignments, curvpool, provenance
from .schemas import Aggregator, PoolAssignment, PooledGraph, Strategy, StrategyKind

__all__ = [
    "Aggregator",
    "PoolAssignment",
    "PooledGraph",
    "PoolingStep",
    "Strategy",
    "StrategyKind",
    "UnionFind",
    "aggregate_features",
    "candidate_pairs",
    "coarsen",
    "compose_assignments",
    "curvpool",
    "merge_pools",
    "provenance",
    "remap_edges",
    "threshold_pairs",
]
