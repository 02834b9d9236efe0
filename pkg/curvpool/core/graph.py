"""
Graph core - simple undirected graphs and node feature matrices.

Node indices are dense integers 0..n-1. Adjacency lists are ascending tuples so
two of them intersect with a linear merge.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import IndexOutOfRange, InvariantViolation, SelfLoopRejected, ShapeMismatch

Edge = Tuple[int, int]


def canonical(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected unweighted graph."""

    num_nodes: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.num_nodes:
            raise InvariantViolation(
                "adjacency length",
                f"{len(self.adjacency)} lists for {self.num_nodes} nodes",
            )

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges (u < v) in ascending lexicographic order."""
        return tuple((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.neighbor_sets[u]

    def _check(self, i: int) -> None:
        if not 0 <= i < self.num_nodes:
            raise IndexOutOfRange(i, self.num_nodes)

    def validate(self) -> None:
        """Check every Graph invariant, raising InvariantViolation on the first failure."""
        for i, nbrs in enumerate(self.adjacency):
            for pos, j in enumerate(nbrs):
                if not 0 <= j < self.num_nodes:
                    raise InvariantViolation("index range", f"neighbor {j} of node {i}")
                if j == i:
                    raise InvariantViolation("no self-loops", f"node {i}")
                if pos and nbrs[pos - 1] >= j:
                    raise InvariantViolation("strictly increasing adjacency", f"node {i}")
                if i not in self.neighbor_sets[j]:
                    raise InvariantViolation("symmetry", f"{j} in N({i}) but {i} not in N({j})")


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list, deduplicating and symmetrizing it."""
    if n < 0:
        raise IndexOutOfRange(n, 0, what="node count")
    pairs = set()
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise IndexOutOfRange(x, n)
        if u == v:
            raise SelfLoopRejected(u)
        pairs.add(canonical(u, v))

    adjacency: List[List[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(num_nodes=n, adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency))


def degree(g: Graph, i: int) -> int:
    g._check(i)
    return len(g.adjacency[i])


def common_neighbors(g: Graph, i: int, j: int) -> List[int]:
    """Sorted N_i ∩ N_j by linear merge of the two adjacency lists."""
    g._check(i)
    g._check(j)
    a, b = g.adjacency[i], g.adjacency[j]
    out: List[int] = []
    p = q = 0
    while p < len(a) and q < len(b):
        if a[p] == b[q]:
            out.append(a[p])
            p += 1
            q += 1
        elif a[p] < b[q]:
            p += 1
        else:
            q += 1
    return out


def induced_connected(g: Graph, nodes: Iterable[int]) -> bool:
    """True when `nodes` induce a connected subgraph (empty sets are not connected)."""
    members = set(nodes)
    if not members:
        return False
    start = next(iter(members))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v in members and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(members)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with node i renamed to perm[i]."""
    if sorted(perm) != list(range(g.num_nodes)):
        raise InvariantViolation("permutation", "perm must be a permutation of 0..n-1")
    return build_graph(g.num_nodes, [(perm[u], perm[v]) for u, v in g.edges])


@dataclass(frozen=True, eq=False)
class FeatureMatrix:
    """Dense per-node feature rows; row r is the feature vector of node r."""

    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=np.float64, copy=True)
        if arr.ndim != 2:
            raise ShapeMismatch(f"feature matrix must be 2-D, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InvariantViolation("finite values", "feature matrix contains NaN or inf")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], cols: int = 0) -> "FeatureMatrix":
        if not rows:
            return cls(np.zeros((0, cols)))
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise ShapeMismatch(f"ragged feature rows, widths {sorted(widths)}")
        return cls(np.asarray(rows, dtype=np.float64))

    @property
    def rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def cols(self) -> int:
        return int(self.values.shape[1])

    def take(self, order: Sequence[int]) -> "FeatureMatrix":
        return FeatureMatrix(self.values[list(order)] if len(order) else np.zeros((0, self.cols)))

    def check_pairs_with(self, g: Graph) -> None:
        if self.rows != g.num_nodes:
            raise ShapeMismatch(f"feature matrix has {self.rows} rows for a {g.num_nodes}-node graph")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeatureMatrix):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(np.array_equal(self.values, other.values))

    def __repr__(self) -> str:
        return f"FeatureMatrix(rows={self.rows}, cols={self.cols})"
