"""Candidate pool pairs selected from edge curvature."""

from typing import Callable, Set

from ..core.curvature import EdgeCurvature
from ..core.graph import Edge
from .schemas import Strategy


def threshold_pairs(curv: EdgeCurvature, criterion: Callable[[float], bool]) -> Set[Edge]:
    """Edges whose curvature satisfies an arbitrary criterion."""
    return {edge for edge, value in curv.values.items() if criterion(value)}


def candidate_pairs(curv: EdgeCurvature, strategy: Strategy) -> Set[Edge]:
    """High: BFC > t_high. Low: BFC < t_low. Mixed: either."""
    return threshold_pairs(curv, strategy.selects)
