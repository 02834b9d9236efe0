"""Curvature distributions, pooling reports and benchmarks."""

from .schemas import BenchRow, CurvatureHistogram, GraphStats, PoolingReport, ThresholdSplit
from .stats import (
    dataset_histogram,
    graph_stats,
    histogram,
    histogram_text,
    pooling_report,
    recommend_threshold,
    threshold_split,
)
from .bench import bench_ladder, growth_ratios

__all__ = [
    "BenchRow",
    "CurvatureHistogram",
    "GraphStats",
    "PoolingReport",
    "ThresholdSplit",
    "bench_ladder",
    "dataset_histogram",
    "graph_stats",
    "growth_ratios",
    "histogram",
    "histogram_text",
    "pooling_report",
    "recommend_threshold",
    "threshold_split",
]
