"""
CurvPool pipeline: curvature -> candidate pairs -> overlap merge -> aggregation/remap.

Curvature only depends on the graph, so callers that pool the same graph more
than once pass a precomputed EdgeCurvature instead of recomputing it.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..core.curvature import EdgeCurvature, bfc_all
from ..core.errors import InvalidSpec, ShapeMismatch
from ..core.graph import FeatureMatrix, Graph
from ..core.logger import get_logger
from .aggregate import aggregate_features, remap_edges
from .candidates import candidate_pairs
from .merge import merge_pools
from .schemas import Aggregator, PoolAssignment, PooledGraph, Strategy

logger = get_logger("curvpool.pooling")


@dataclass(frozen=True)
class PoolingStep:
    """One level of coarsening together with the curvature it was derived from."""

    source: Graph
    curvature: EdgeCurvature
    pooled: PooledGraph
    features: FeatureMatrix


def curvpool(
    g: Graph,
    feats: FeatureMatrix,
    strategy: Strategy,
    agg: Aggregator = Aggregator.SUM,
    curv: Optional[EdgeCurvature] = None,
) -> Tuple[PooledGraph, FeatureMatrix]:
    """Pool `g` once under `strategy`, aggregating `feats` with `agg`."""
    feats.check_pairs_with(g)
    if curv is None:
        curv = bfc_all(g)
    elif curv.values.keys() != set(g.edges):
        raise ShapeMismatch(f"curvature has {len(curv)} entries that do not match the graph's {g.num_edges} edges")

    pairs = candidate_pairs(curv, strategy)
    pools = merge_pools(g.num_nodes, pairs)
    pooled = remap_edges(g, pools)
    pooled_feats = aggregate_features(feats, pools, agg)
    logger.debug(
        "curvpool step",
        strategy=strategy.kind.value,
        candidates=len(pairs),
        nodes_before=g.num_nodes,
        nodes_after=pooled.graph.num_nodes,
    )
    return pooled, pooled_feats


def coarsen(
    g: Graph,
    feats: FeatureMatrix,
    strategy: Strategy,
    agg: Aggregator = Aggregator.SUM,
    levels: int = 1,
    curv: Optional[EdgeCurvature] = None,
) -> List[PoolingStep]:
    """Pool repeatedly, recomputing curvature on each pooled graph.

    Stops before `levels` once a step leaves the graph unchanged.
    """
    if levels < 1:
        raise InvalidSpec(f"levels must be >= 1, got {levels}")
    steps: List[PoolingStep] = []
    graph, features = g, feats
    for level in range(levels):
        level_curv = curv if (level == 0 and curv is not None) else bfc_all(graph)
        pooled, pooled_feats = curvpool(graph, features, strategy, agg, curv=level_curv)
        steps.append(PoolingStep(graph, level_curv, pooled, pooled_feats))
        if pooled.graph.num_nodes == graph.num_nodes:
            break
        graph, features = pooled.graph, pooled_feats
    return steps


def compose_assignments(outer: PoolAssignment, inner: PoolAssignment) -> PoolAssignment:
    """Map original nodes through `outer` then `inner` (inner pools outer's pool indices)."""
    if inner.num_nodes != len(outer.pools):
        raise ShapeMismatch(f"inner assignment covers {inner.num_nodes} nodes, outer has {len(outer.pools)} pools")
    merged = [[x for p in members for x in outer.pools[p]] for members in inner.pools]
    return PoolAssignment.from_pools(outer.num_nodes, merged)


def provenance(steps: List[PoolingStep]) -> PoolAssignment:
    """Assignment of the input graph's nodes to the final level's pools."""
    if not steps:
        raise InvalidSpec("no pooling steps")
    assignment = steps[0].pooled.origin
    for step in steps[1:]:
        assignment = compose_assignments(assignment, step.pooled.origin)
    return assignment
