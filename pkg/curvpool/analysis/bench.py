"""
Precompute benchmark over a caveman size ladder.

Curvature cost is O(|E| * d_max^2); with a fixed cave size the degree is fixed,
so the time per ladder step should grow about linearly with the edge count.
"""

import time
from typing import Callable, List, Sequence, Tuple, TypeVar

from ..baselines.cliques import clique_pool
from ..core.curvature import bfc_all
from ..datasets.generators import CavemanSpec, caveman, degree_features
from ..pooling.pipeline import curvpool
from ..pooling.schemas import Aggregator, Strategy
from .schemas import BenchRow

T = TypeVar("T")

DEFAULT_LADDER = (50, 100, 200, 400)


def timed(fn: Callable[[], T], repeats: int = 1) -> Tuple[T, float]:
    """Run `fn` `repeats` times, returning the last result and the best wall time."""
    best = float("inf")
    result = None
    for _ in range(max(1, repeats)):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return result, best


def bench_ladder(
    ladder: Sequence[int] = DEFAULT_LADDER,
    clique_size: int = 6,
    seed: int = 0,
    strategy: Strategy = Strategy.high(0.0),
    agg: Aggregator = Aggregator.SUM,
    repeats: int = 1,
) -> List[BenchRow]:
    rows = []
    for num_cliques in ladder:
        g = caveman(CavemanSpec(num_cliques=num_cliques, clique_size=clique_size, seed=seed))
        feats = degree_features(g)
        curv, bfc_seconds = timed(lambda: bfc_all(g), repeats)
        _, pool_seconds = timed(lambda: curvpool(g, feats, strategy, agg, curv=curv), repeats)
        _, clique_seconds = timed(lambda: clique_pool(g, feats, agg), repeats)
        rows.append(
            BenchRow(
                num_cliques=num_cliques,
                clique_size=clique_size,
                nodes=g.num_nodes,
                edges=g.num_edges,
                bfc_seconds=bfc_seconds,
                curvpool_seconds=pool_seconds,
                cliquepool_seconds=clique_seconds,
            )
        )
    return rows


def growth_ratios(rows: Sequence[BenchRow]) -> List[float]:
    """bfc time ratio between consecutive ladder steps."""
    ratios = []
    for prev, cur in zip(rows, rows[1:]):
        ratios.append(cur.bfc_seconds / prev.bfc_seconds if prev.bfc_seconds > 0 else float("inf"))
    return ratios
