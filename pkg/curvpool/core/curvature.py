"""
Balanced Forman curvature of graph edges.

For an edge (i, j) with degrees d_i, d_j the curvature is 0 when min(d_i, d_j) = 1
and otherwise

    2/d_i + 2/d_j - 2 + 2|T|/max(d_i, d_j) + |T|/min(d_i, d_j)
        + (sq_i + sq_j) / (gamma_max * max(d_i, d_j))

where T are the triangles on the edge, sq_i / sq_j count the neighbors of i / j
that close a 4-cycle through the edge without a diagonal, and gamma_max is the
largest number of such 4-cycles passing through a single node. The square term
is 0 when there is no such 4-cycle.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from .errors import EdgeNotPresent, IndexOutOfRange
from .graph import Edge, Graph, canonical, common_neighbors

NeighborSets = Sequence[FrozenSet[int]]


@dataclass(frozen=True)
class SquareStats:
    sq_i: int
    sq_j: int
    gamma_max: int


@dataclass(frozen=True)
class EdgeCurvature:
    """Per-edge curvature keyed by canonical (min, max) pairs."""

    values: Dict[Edge, float]

    def __getitem__(self, edge: Edge) -> float:
        return self.values[canonical(*edge)]

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, edge: object) -> bool:
        return isinstance(edge, tuple) and len(edge) == 2 and canonical(*edge) in self.values

    def items(self) -> Iterable[Tuple[Edge, float]]:
        return sorted(self.values.items())

    def sorted_values(self) -> list:
        return [value for _, value in self.items()]


def _require_edge(g: Graph, i: int, j: int) -> None:
    for x in (i, j):
        if not 0 <= x < g.num_nodes:
            raise IndexOutOfRange(x, g.num_nodes)
    if j not in g.neighbor_sets[i]:
        raise EdgeNotPresent(i, j)


def _side(nbrs: NeighborSets, i: int, j: int) -> Tuple[int, int]:
    """(|square^i|, max cycles through one i-side node) for edge (i, j)."""
    n_i, n_j = nbrs[i], nbrs[j]
    count = 0
    best = 0
    for k in n_i:
        if k == j or k in n_j:
            continue
        # 4-cycle i-k-w-j needing neither diagonal (i,w) nor (k,j)
        closing = sum(1 for w in nbrs[k] & n_j if w != i and w not in n_i)
        if closing:
            count += 1
            best = max(best, closing)
    return count, best


def _square_stats(nbrs: NeighborSets, i: int, j: int) -> SquareStats:
    sq_i, best_i = _side(nbrs, i, j)
    sq_j, best_j = _side(nbrs, j, i)
    return SquareStats(sq_i=sq_i, sq_j=sq_j, gamma_max=max(best_i, best_j))


def square_stats(g: Graph, i: int, j: int) -> SquareStats:
    """Diagonal-free 4-cycle counts on both sides of edge (i, j) and their gamma_max."""
    _require_edge(g, i, j)
    return _square_stats(g.neighbor_sets, i, j)


def _bfc(nbrs: NeighborSets, i: int, j: int) -> float:
    d_i, d_j = len(nbrs[i]), len(nbrs[j])
    d_min, d_max = min(d_i, d_j), max(d_i, d_j)
    if d_min == 1:
        return 0.0
    triangles = len(nbrs[i] & nbrs[j])
    value = 2.0 / d_i + 2.0 / d_j - 2.0 + 2.0 * triangles / d_max + triangles / d_min
    stats = _square_stats(nbrs, i, j)
    if stats.gamma_max:
        value += (stats.sq_i + stats.sq_j) / (stats.gamma_max * d_max)
    return value


def triangle_count(g: Graph, i: int, j: int) -> int:
    _require_edge(g, i, j)
    return len(common_neighbors(g, i, j))


def bfc_edge(g: Graph, i: int, j: int) -> float:
    """Balanced Forman curvature of one edge."""
    _require_edge(g, i, j)
    return _bfc(g.neighbor_sets, i, j)


def bfc_all(g: Graph, neighbor_sets: Optional[NeighborSets] = None) -> EdgeCurvature:
    """Curvature of every edge; each value only depends on the immutable graph."""
    nbrs = neighbor_sets if neighbor_sets is not None else g.neighbor_sets
    return EdgeCurvature({(u, v): _bfc(nbrs, u, v) for u, v in g.edges})


def mean_curvature(curv: EdgeCurvature) -> Optional[float]:
    """Arithmetic mean over edges, None for an edgeless graph."""
    if not curv.values:
        return None
    values = curv.sorted_values()
    return sum(values) / len(values)
