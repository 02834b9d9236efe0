"""
CliquePool baseline: every maximal clique becomes a pool, and nodes shared
between cliques stay only in the largest one.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from ..core.graph import FeatureMatrix, Graph
from ..core.logger import get_logger
from ..pooling.aggregate import aggregate_features, remap_edges
from ..pooling.schemas import Aggregator, PoolAssignment, PooledGraph

logger = get_logger("curvpool.baselines")


@dataclass(frozen=True)
class CliqueSet:
    """Maximal cliques as ascending member tuples, in ascending lexicographic order."""

    cliques: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cliques)


def _expand(
    r: List[int],
    p: Set[int],
    x: Set[int],
    nbrs: Sequence[FrozenSet[int]],
    out: List[Tuple[int, ...]],
) -> None:
    if not p and not x:
        out.append(tuple(sorted(r)))
        return
    # Tomita pivot: the candidate covering most of P
    pivot = max(sorted(p | x), key=lambda u: len(p & nbrs[u]))
    for v in sorted(p - nbrs[pivot]):
        r.append(v)
        _expand(r, p & nbrs[v], x & nbrs[v], nbrs, out)
        r.pop()
        p.remove(v)
        x.add(v)


def maximal_cliques(g: Graph) -> CliqueSet:
    """All maximal cliques (Bron-Kerbosch with pivoting); isolated nodes are singleton cliques."""
    out: List[Tuple[int, ...]] = []
    if g.num_nodes == 0:
        return CliqueSet(())
    _expand([], set(range(g.num_nodes)), set(), g.neighbor_sets, out)
    return CliqueSet(tuple(sorted(out)))


def dedup_cliques(n: int, cliques: CliqueSet) -> PoolAssignment:
    """Largest cliques first (ties lexicographic); each node stays in the first clique holding it."""
    ordered = sorted(cliques.cliques, key=lambda members: (-len(members), members))
    taken = [False] * n
    pools = []
    for members in ordered:
        kept = [x for x in members if not taken[x]]
        for x in kept:
            taken[x] = True
        if kept:
            pools.append(kept)
    return PoolAssignment.from_pools(n, pools)


def clique_pool(
    g: Graph,
    feats: FeatureMatrix,
    agg: Aggregator = Aggregator.SUM,
    cliques: Optional[CliqueSet] = None,
) -> Tuple[PooledGraph, FeatureMatrix]:
    """Pool `g` by maximal cliques, reusing the CurvPool aggregation and remap."""
    feats.check_pairs_with(g)
    if cliques is None:
        cliques = maximal_cliques(g)
    pools = dedup_cliques(g.num_nodes, cliques)
    pooled = remap_edges(g, pools)
    logger.debug("clique pool", cliques=len(cliques), pools=len(pools), nodes_before=g.num_nodes)
    return pooled, aggregate_features(feats, pools, agg)
