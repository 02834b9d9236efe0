"""
Pooling data types: strategies, aggregators, pool assignments and pooled graphs.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.errors import IndexOutOfRange, InvalidThresholds, InvariantViolation
from ..core.graph import Graph, induced_connected


class StrategyKind(Enum):
    HIGH = "high"
    LOW = "low"
    MIXED = "mixed"


class Aggregator(Enum):
    SUM = "sum"
    AVG = "avg"
    MAX = "max"


@dataclass(frozen=True)
class Strategy:
    """Which curvature values turn an edge into a pool candidate."""

    kind: StrategyKind
    t_low: Optional[float] = None
    t_high: Optional[float] = None

    def __post_init__(self) -> None:
        needs_low = self.kind in (StrategyKind.LOW, StrategyKind.MIXED)
        needs_high = self.kind in (StrategyKind.HIGH, StrategyKind.MIXED)
        if needs_low and self.t_low is None:
            raise InvalidThresholds(f"{self.kind.value} strategy needs t_low")
        if needs_high and self.t_high is None:
            raise InvalidThresholds(f"{self.kind.value} strategy needs t_high")
        for name in ("t_low", "t_high"):
            value = getattr(self, name)
            if value is not None and math.isnan(value):
                raise InvalidThresholds(f"{name} must not be NaN")
        if self.kind is StrategyKind.MIXED and self.t_low > self.t_high:
            raise InvalidThresholds(
                f"mixed strategy needs t_low <= t_high, got t_low={self.t_low} t_high={self.t_high}"
            )

    @classmethod
    def high(cls, t_high: float) -> "Strategy":
        return cls(StrategyKind.HIGH, t_high=t_high)

    @classmethod
    def low(cls, t_low: float) -> "Strategy":
        return cls(StrategyKind.LOW, t_low=t_low)

    @classmethod
    def mixed(cls, t_low: float, t_high: float) -> "Strategy":
        return cls(StrategyKind.MIXED, t_low=t_low, t_high=t_high)

    def selects(self, value: float) -> bool:
        """Strict comparisons; a value equal to a threshold never pools."""
        low = self.t_low is not None and self.kind is not StrategyKind.HIGH and value < self.t_low
        high = self.t_high is not None and self.kind is not StrategyKind.LOW and value > self.t_high
        return low or high


@dataclass(frozen=True)
class PoolAssignment:
    """Disjoint pools covering 0..n-1, ordered by their smallest member."""

    pools: Tuple[Tuple[int, ...], ...]
    pool_of: Tuple[int, ...]

    @property
    def num_nodes(self) -> int:
        return len(self.pool_of)

    def __len__(self) -> int:
        return len(self.pools)

    @classmethod
    def from_pools(cls, n: int, pools: Iterable[Iterable[int]], location: str = "") -> "PoolAssignment":
        """Build an assignment, rejecting overlaps, gaps, empty pools and bad indices."""
        ordered: List[Tuple[int, ...]] = []
        for pool in pools:
            members = tuple(sorted(set(pool)))
            if not members:
                raise InvariantViolation("non-empty pools", "empty pool", location)
            for x in members:
                if not 0 <= x < n:
                    raise IndexOutOfRange(x, n)
            ordered.append(members)
        ordered.sort(key=lambda members: members[0])

        pool_of = [-1] * n
        for index, members in enumerate(ordered):
            for x in members:
                if pool_of[x] != -1:
                    raise InvariantViolation(
                        "disjoint pools", f"node {x} in pools {pool_of[x]} and {index}", location
                    )
                pool_of[x] = index
        missing = [x for x, p in enumerate(pool_of) if p == -1]
        if missing:
            raise InvariantViolation("complete pooling", f"nodes {missing[:10]} in no pool", location)
        return cls(pools=tuple(ordered), pool_of=tuple(pool_of))

    @classmethod
    def identity(cls, n: int) -> "PoolAssignment":
        return cls(pools=tuple((i,) for i in range(n)), pool_of=tuple(range(n)))

    def validate(self, g: Optional[Graph] = None) -> None:
        """Re-check every invariant; with a graph also check each pool is induced-connected."""
        rebuilt = PoolAssignment.from_pools(len(self.pool_of), self.pools)
        if rebuilt != self:
            raise InvariantViolation("pool ordering", "pools not sorted or pool_of inconsistent")
        if g is not None:
            if g.num_nodes != self.num_nodes:
                raise InvariantViolation(
                    "node count", f"assignment covers {self.num_nodes} nodes, graph has {g.num_nodes}"
                )
            for index, members in enumerate(self.pools):
                if not induced_connected(g, members):
                    raise InvariantViolation("connected pools", f"pool {index} {list(members)}")

    def sizes(self) -> List[int]:
        return [len(members) for members in self.pools]


@dataclass(frozen=True)
class PooledGraph:
    """Coarsened graph over pool indices with provenance back to the source nodes."""

    graph: Graph
    origin: PoolAssignment

    def members(self, pooled_node: int) -> Sequence[int]:
        return self.origin.pools[pooled_node]
