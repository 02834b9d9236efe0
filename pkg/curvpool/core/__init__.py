"""
Core modules for curvpool: configuration, logging, errors, graphs and curvature.
"""

from .config import Config, get_config
from .curvature import EdgeCurvature, SquareStats, bfc_all, bfc_edge, mean_curvature, square_stats
from .graph import FeatureMatrix, Graph, build_graph, common_neighbors, degree
from .logger import get_logger, setup_logging

__all__ = [
    "Config",
    "EdgeCurvature",
    "FeatureMatrix",
    "Graph",
    "SquareStats",
    "bfc_all",
    "bfc_edge",
    "build_graph",
    "common_neighbors",
    "degree",
    "get_config",
    "get_logger",
    "mean_curvature",
    "setup_logging",
    "square_stats",
]
