"""
Overlap merge of pool candidates.

Candidate pools {i, j} that share a node are merged until all pools are
disjoint, i.e. the final pools are the connected components of the candidate
graph, with untouched nodes left as singletons.
"""

from typing import Dict, Iterable, List

from ..core.errors import IndexOutOfRange
from ..core.graph import Edge
from .schemas import PoolAssignment


class UnionFind:
    """Disjoint sets over 0..n-1 with union by rank and path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            self.parent[x_root] = y_root
        elif self.rank[x_root] > self.rank[y_root]:
            self.parent[y_root] = x_root
        else:
            self.parent[y_root] = x_root
            self.rank[x_root] += 1

    def is_same(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def groups(self) -> List[List[int]]:
        """Sets as ascending member lists, ordered by smallest member."""
        by_root: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        # members are appended in ascending order, so dict order is by minimum
        return list(by_root.values())

    def __repr__(self) -> str:
        return f"UnionFind({self.parent})"


def merge_pools(n: int, pairs: Iterable[Edge]) -> PoolAssignment:
    """Pools = connected components of (V, pairs); the result is order independent."""
    uf = UnionFind(n)
    for u, v in pairs:
        for x in (u, v):
            if not 0 <= x < n:
                raise IndexOutOfRange(x, n)
        uf.union(u, v)
    groups = uf.groups()
    pool_of = [0] * n
    for index, members in enumerate(groups):
        for x in members:
            pool_of[x] = index
    return PoolAssignment(pools=tuple(tuple(m) for m in groups), pool_of=tuple(pool_of))
