from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class CurvatureHistogram(BaseModel):
    bin_edges: List[float]
    counts: List[int]
    min: float
    max: float
    mean: float
    median: float

    @model_validator(mode="after")
    def check_bins(self) -> "CurvatureHistogram":
        if len(self.bin_edges) != len(self.counts) + 1:
            raise ValueError("bin_edges must have one more entry than counts")
        if any(b <= a for a, b in zip(self.bin_edges, self.bin_edges[1:])):
            raise ValueError("bin_edges must be strictly increasing")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")
        return self

    @property
    def total(self) -> int:
        return sum(self.counts)

    def centers(self) -> List[float]:
        return [(a + b) / 2.0 for a, b in zip(self.bin_edges, self.bin_edges[1:])]


class PoolingReport(BaseModel):
    nodes_before: int
    nodes_after: int
    edges_before: int
    edges_after: int
    mean_curv_before: Optional[float] = None
    mean_curv_after: Optional[float] = None
    pool_size_histogram: Dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_counts(self) -> "PoolingReport":
        if self.nodes_after > self.nodes_before:
            raise ValueError("nodes_after exceeds nodes_before")
        if self.edges_after > self.edges_before:
            raise ValueError("edges_after exceeds edges_before")
        covered = sum(size * count for size, count in self.pool_size_histogram.items())
        if covered != self.nodes_before:
            raise ValueError(f"pool sizes cover {covered} nodes, expected {self.nodes_before}")
        return self

    @property
    def mean_curvature_rose(self) -> Optional[bool]:
        if self.mean_curv_before is None or self.mean_curv_after is None:
            return None
        return self.mean_curv_after > self.mean_curv_before


class GraphStats(BaseModel):
    """One row of a dataset curvature table."""

    graph: str
    label: Optional[int] = None
    nodes: int
    edges: int
    curv_min: Optional[float] = None
    curv_max: Optional[float] = None
    curv_mean: Optional[float] = None
    curv_median: Optional[float] = None


class ThresholdSplit(BaseModel):
    threshold: float
    below: float
    equal: float
    above: float


class BenchRow(BaseModel):
    num_cliques: int
    clique_size: int
    nodes: int
    edges: int
    bfc_seconds: float
    curvpool_seconds: float
    cliquepool_seconds: float
