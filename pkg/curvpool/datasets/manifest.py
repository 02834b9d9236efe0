"""
Dataset manifests: a YAML list of graph files, feature sources and labels.

    name: artificial
    graphs:
      - graph: graphs/g0000.edges
        features: degrees
        label: 0

Relative paths resolve against the manifest's directory. The feature source is
either a feature file or the literal `degrees`.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple

import yaml
from pydantic import BaseModel, Field, ValidationError

from ..core.errors import InvariantViolation, ParseError
from ..core.graph import FeatureMatrix, Graph
from .formats import read_edge_list, read_features, read_text
from .generators import degree_features

DEGREES = "degrees"


class ManifestEntry(BaseModel):
    graph: str
    features: str = DEGREES
    label: int = Field(default=0, ge=0)


class DatasetManifest(BaseModel):
    name: str
    graphs: List[ManifestEntry] = Field(default_factory=list)


@dataclass(frozen=True)
class LoadedGraph:
    name: str
    graph: Graph
    features: FeatureMatrix
    label: int


def write_manifest(manifest: DatasetManifest) -> str:
    return yaml.safe_dump(manifest.model_dump(mode="json"), sort_keys=False, default_flow_style=False)


def read_manifest(path: Path) -> Tuple[DatasetManifest, Path]:
    """Parse and validate a manifest; returns it with the directory paths resolve against."""
    path = Path(path)
    try:
        data = yaml.safe_load(read_text(path))
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ParseError(str(exc), str(path), mark.line + 1 if mark else None) from None
    try:
        manifest = DatasetManifest.model_validate(data)
    except ValidationError as exc:
        raise ParseError(f"invalid manifest: {exc}", str(path)) from None

    base = path.parent
    for index, entry in enumerate(manifest.graphs):
        sources = [entry.graph] + ([] if entry.features == DEGREES else [entry.features])
        for source in sources:
            if not (base / source).is_file():
                raise InvariantViolation("paths exist", f"missing file {source}", f"{path}:graphs[{index}]")
    return manifest, base


def load_entry(entry: ManifestEntry, base: Path) -> LoadedGraph:
    graph_path = base / entry.graph
    graph = read_edge_list(read_text(graph_path), name=str(graph_path))
    if entry.features == DEGREES:
        feats = degree_features(graph)
    else:
        feature_path = base / entry.features
        feats = read_features(read_text(feature_path), name=str(feature_path))
        feats.check_pairs_with(graph)
    return LoadedGraph(name=Path(entry.graph).stem, graph=graph, features=feats, label=entry.label)


def is_manifest(path: Path) -> bool:
    return Path(path).suffix.lower() in (".yaml", ".yml")
