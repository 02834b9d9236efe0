"""
Curvature distribution reports and before/after pooling statistics.
"""

from typing import Iterable, List, Optional, Sequence, Union

import numpy as np

from ..core.config import get_config
from ..core.curvature import EdgeCurvature, mean_curvature
from ..core.errors import EmptyInput, ShapeMismatch
from ..core.graph import Graph
from ..core.logger import get_logger
from ..pooling.schemas import PoolAssignment
from .schemas import CurvatureHistogram, GraphStats, PoolingReport, ThresholdSplit

logger = get_logger("curvpool.analysis")

CurvatureInput = Union[EdgeCurvature, Sequence[float]]


def _values(curv: CurvatureInput) -> List[float]:
    if isinstance(curv, EdgeCurvature):
        return curv.sorted_values()
    return [float(v) for v in curv]


def histogram(curv: CurvatureInput, num_bins: int = 40) -> CurvatureHistogram:
    """Uniform bins over [min, max]; bins are right-open except the last."""
    values = _values(curv)
    if not values:
        raise EmptyInput("histogram needs at least one curvature value")
    if num_bins < 1:
        raise EmptyInput(f"num_bins must be >= 1, got {num_bins}")
    arr = np.asarray(values, dtype=np.float64)
    lo, hi = float(arr.min()), float(arr.max())
    # a single distinct value gets a unit-wide range centred on it
    bin_range = (lo - 0.5, hi + 0.5) if lo == hi else (lo, hi)
    counts, edges = np.histogram(arr, bins=num_bins, range=bin_range)
    return CurvatureHistogram(
        bin_edges=[float(e) for e in edges],
        counts=[int(c) for c in counts],
        min=lo,
        max=hi,
        mean=float(arr.mean()),
        median=float(np.median(arr)),
    )


def dataset_histogram(curvatures: Iterable[CurvatureInput], num_bins: int = 40) -> CurvatureHistogram:
    """Histogram over the concatenated curvature values of many graphs."""
    values: List[float] = []
    for curv in curvatures:
        values.extend(_values(curv))
    return histogram(values, num_bins)


def histogram_text(hist: CurvatureHistogram, precision: Optional[int] = None) -> str:
    """Two columns `bin_center count`, one bin per line."""
    digits = precision or get_config().histogram_precision
    lines = [f"{center:.{digits}g} {count}" for center, count in zip(hist.centers(), hist.counts)]
    return "\n".join(lines) + "\n"


def recommend_threshold(values: Sequence[float]) -> float:
    """Median of the curvature values: the threshold splitting the edges into halves."""
    if len(values) == 0:
        raise EmptyInput("cannot recommend a threshold without curvature values")
    arr = np.asarray(values, dtype=np.float64)
    if arr.min() == arr.max():
        logger.warning(
            "all curvature values are equal; a strict threshold at this value pools nothing",
            value=float(arr[0]),
        )
    return float(np.median(arr))


def threshold_split(values: Sequence[float], threshold: float) -> ThresholdSplit:
    """Fractions of values strictly below, equal to and strictly above a threshold."""
    if len(values) == 0:
        raise EmptyInput("threshold_split needs at least one value")
    arr = np.asarray(values, dtype=np.float64)
    total = float(arr.size)
    return ThresholdSplit(
        threshold=threshold,
        below=float(np.count_nonzero(arr < threshold)) / total,
        equal=float(np.count_nonzero(arr == threshold)) / total,
        above=float(np.count_nonzero(arr > threshold)) / total,
    )


def pooling_report(
    g_before: Graph,
    curv_before: EdgeCurvature,
    g_after: Graph,
    curv_after: EdgeCurvature,
    pools: PoolAssignment,
) -> PoolingReport:
    """Node/edge counts, mean curvature and pool sizes before and after one pooling step."""
    if pools.num_nodes != g_before.num_nodes:
        raise ShapeMismatch(f"pools cover {pools.num_nodes} nodes, source graph has {g_before.num_nodes}")
    if len(pools) != g_after.num_nodes:
        raise ShapeMismatch(f"{len(pools)} pools for a pooled graph of {g_after.num_nodes} nodes")
    if len(curv_before) != g_before.num_edges or len(curv_after) != g_after.num_edges:
        raise ShapeMismatch("curvature maps do not match their graphs' edge counts")

    size_histogram: dict = {}
    for size in pools.sizes():
        size_histogram[size] = size_histogram.get(size, 0) + 1
    return PoolingReport(
        nodes_before=g_before.num_nodes,
        nodes_after=g_after.num_nodes,
        edges_before=g_before.num_edges,
        edges_after=g_after.num_edges,
        mean_curv_before=mean_curvature(curv_before),
        mean_curv_after=mean_curvature(curv_after),
        pool_size_histogram=dict(sorted(size_histogram.items())),
    )


def graph_stats(name: str, g: Graph, curv: EdgeCurvature, label: Optional[int] = None) -> GraphStats:
    values = curv.sorted_values()
    if not values:
        return GraphStats(graph=name, label=label, nodes=g.num_nodes, edges=g.num_edges)
    arr = np.asarray(values, dtype=np.float64)
    return GraphStats(
        graph=name,
        label=label,
        nodes=g.num_nodes,
        edges=g.num_edges,
        curv_min=float(arr.min()),
        curv_max=float(arr.max()),
        curv_mean=mean_curvature(curv),
        curv_median=float(np.median(arr)),
    )
