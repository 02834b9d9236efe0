"""Synthetic datasets and file formats."""

from .generators import (
    CavemanSpec,
    artificial_dataset,
    artificial_specs,
    barbell,
    caveman,
    complete,
    cycle,
    degree_features,
    erdos_renyi,
    path,
    star,
)
from .formats import (
    read_curvature,
    read_edge_list,
    read_features,
    read_pools,
    read_report,
    read_text,
    write_curvature,
    write_edge_list,
    write_features,
    write_pools,
    write_report,
)
from .manifest import DatasetManifest, LoadedGraph, ManifestEntry, load_entry, read_manifest, write_manifest

__all__ = [
    "CavemanSpec",
    "DatasetManifest",
    "LoadedGraph",
    "ManifestEntry",
    "artificial_dataset",
    "artificial_specs",
    "barbell",
    "caveman",
    "complete",
    "cycle",
    "degree_features",
    "erdos_renyi",
    "load_entry",
    "path",
    "read_curvature",
    "read_edge_list",
    "read_features",
    "read_manifest",
    "read_pools",
    "read_report",
    "read_text",
    "star",
    "write_curvature",
    "write_edge_list",
    "write_features",
    "write_manifest",
    "write_pools",
    "write_report",
]
