"""
Per-graph jobs run by the CLI's worker pool.

Each job is a top-level function of one picklable job object, so the same code
runs inline (one thread) or in worker processes with identical results.
"""

import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .analysis.schemas import GraphStats, PoolingReport
from .analysis.stats import graph_stats, pooling_report
from .baselines.cliques import clique_pool
from .core.curvature import EdgeCurvature, bfc_all
from .core.graph import FeatureMatrix, Graph
from .pooling.pipeline import coarsen
from .pooling.schemas import Aggregator, PoolAssignment, Strategy


@dataclass(frozen=True)
class GraphJob:
    name: str
    graph: Graph
    features: Optional[FeatureMatrix] = None
    label: Optional[int] = None


@dataclass(frozen=True)
class PoolJob:
    item: GraphJob
    agg: Aggregator
    # None selects CliquePool
    strategy: Optional[Strategy] = None
    levels: int = 1
    curvature: Optional[EdgeCurvature] = None


@dataclass(frozen=True)
class PoolLevel:
    graph: Graph
    features: FeatureMatrix
    pools: PoolAssignment
    report: PoolingReport


@dataclass(frozen=True)
class PoolResult:
    name: str
    label: Optional[int]
    levels: Tuple[PoolLevel, ...]
    pre_seconds: float
    pool_seconds: float


def curvature_job(item: GraphJob) -> Tuple[EdgeCurvature, float]:
    start = time.perf_counter()
    curv = bfc_all(item.graph)
    return curv, time.perf_counter() - start


def stats_job(item: GraphJob) -> Tuple[GraphStats, List[float]]:
    curv = bfc_all(item.graph)
    return graph_stats(item.name, item.graph, curv, item.label), curv.sorted_values()


def pool_job(job: PoolJob) -> PoolResult:
    g = job.item.graph
    feats = job.item.features
    start = time.perf_counter()
    curv = job.curvature if job.curvature is not None else bfc_all(g)
    pre_seconds = 0.0 if job.curvature is not None else time.perf_counter() - start

    start = time.perf_counter()
    levels: List[PoolLevel] = []
    if job.strategy is None:
        pooled, pooled_feats = clique_pool(g, feats, job.agg)
        after = bfc_all(pooled.graph)
        report = pooling_report(g, curv, pooled.graph, after, pooled.origin)
        levels.append(PoolLevel(pooled.graph, pooled_feats, pooled.origin, report))
    else:
        steps = coarsen(g, feats, job.strategy, job.agg, levels=job.levels, curv=curv)
        for index, step in enumerate(steps):
            after = steps[index + 1].curvature if index + 1 < len(steps) else bfc_all(step.pooled.graph)
            report = pooling_report(step.source, step.curvature, step.pooled.graph, after, step.pooled.origin)
            levels.append(PoolLevel(step.pooled.graph, step.features, step.pooled.origin, report))
    return PoolResult(
        name=job.item.name,
        label=job.item.label,
        levels=tuple(levels),
        pre_seconds=pre_seconds,
        pool_seconds=time.perf_counter() - start,
    )
