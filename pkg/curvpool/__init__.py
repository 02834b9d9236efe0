"""
curvpool - curvature-based graph pooling

Balanced Forman curvature for every edge, curvature-threshold pooling
(high / low / mixed), a CliquePool baseline, synthetic caveman datasets and
curvature distribution reports.
"""

__version__ = "0.1.0"
__description__ = "Curvature-based graph coarsening toolkit"

from .core.config import Config, get_config
from .core.curvature import EdgeCurvature, bfc_all, bfc_edge
from .core.graph import FeatureMatrix, Graph, build_graph
from .core.logger import get_logger
from .pooling import Aggregator, PoolAssignment, PooledGraph, Strategy, coarsen, curvpool
from .baselines import clique_pool, maximal_cliques

# Public API
__all__ = [
    "Aggregator",
    "Config",
    "EdgeCurvature",
    "FeatureMatrix",
    "Graph",
    "PoolAssignment",
    "PooledGraph",
    "Strategy",
    "bfc_all",
    "bfc_edge",
    "build_graph",
    "clique_pool",
    "coarsen",
    "curvpool",
    "get_config",
    "get_logger",
    "maximal_cliques",
    "__version__",
    "__description__",
]
