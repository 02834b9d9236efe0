"""
Plain UTF-8 text formats for graphs, features, curvature, pools and reports.

Writers are canonical (same value, same bytes); every reader re-checks the
invariants of the type it produces.
"""

import io
import json
import math
from pathlib import Path
from typing import Dict, Iterable, List, Optional, TextIO, Union

import numpy as np
from pydantic import ValidationError

from ..analysis.schemas import PoolingReport
from ..core.curvature import EdgeCurvature
from ..core.errors import (
    CurvPoolError,
    IndexOutOfRange,
    InvariantViolation,
    ParseError,
    SelfLoopRejected,
)
from ..core.graph import Edge, FeatureMatrix, Graph, build_graph
from ..pooling.schemas import PoolAssignment

TextSource = Union[str, TextIO]

FLOAT_FORMAT = "%.17g"


def read_text(path: Union[str, Path], name: Optional[str] = None) -> str:
    """Decode a whole input file as UTF-8; a bad byte raises ParseError at its line."""
    path = Path(path)
    data = path.read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        raise ParseError(f"invalid UTF-8 byte 0x{data[exc.start]:02x}", name or str(path), line) from None


def _text(source: TextSource, name: str) -> str:
    if isinstance(source, str):
        return source
    try:
        return source.read()
    except UnicodeDecodeError as exc:
        raise ParseError(f"invalid UTF-8 ({exc.reason})", name) from None


def _lines(source: TextSource) -> Iterable[str]:
    return io.StringIO(source) if isinstance(source, str) else source


def _meaningful(source: TextSource, name: str):
    """(line number, stripped line) for non-empty, non-comment lines."""
    try:
        for number, raw in enumerate(_lines(source), start=1):
            line = raw.strip()
            if line and not line.startswith("#"):
                yield number, line
    except UnicodeDecodeError as exc:
        # streams decode in chunks, so only read_text can cite the line
        raise ParseError(f"invalid UTF-8 ({exc.reason})", name) from None


def _int(token: str, name: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {token!r}", name, line) from None


def format_float(value: float) -> str:
    return FLOAT_FORMAT % value


# -------------------------
# Edge lists
# -------------------------


def read_edge_list(source: TextSource, name: str = "<edge list>") -> Graph:
    """Header `n <count>`, then one `u v` pair per line; `#` starts a comment line."""
    n: Optional[int] = None
    edges: List[Edge] = []
    for number, line in _meaningful(source, name):
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected header 'n <count>', got {line!r}", name, number)
            n = _int(parts[1], name, number)
            if n < 0:
                raise ParseError(f"node count must be >= 0, got {n}", name, number)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", name, number)
        u, v = _int(parts[0], name, number), _int(parts[1], name, number)
        for x in (u, v):
            if not 0 <= x < n:
                raise _at(IndexOutOfRange(x, n), name, number)
        if u == v:
            raise _at(SelfLoopRejected(u), name, number)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <count>'", name)
    return build_graph(n, edges)


def _at(exc: CurvPoolError, name: str, line: int) -> CurvPoolError:
    """Prefix the message with the offending location."""
    exc.args = (f"{name}:{line}: {exc}",)
    return exc


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.num_nodes}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# -------------------------
# Feature matrices
# -------------------------


def read_features(source: TextSource, name: str = "<features>") -> FeatureMatrix:
    """One node per line, comma-separated values."""
    text = _text(source, name)
    if not text.strip():
        return FeatureMatrix(np.zeros((0, 0)))
    try:
        values = np.loadtxt(io.StringIO(text), delimiter=",", ndmin=2, dtype=np.float64)
    except ValueError as exc:
        raise ParseError(str(exc), name) from None
    return FeatureMatrix(values)


def write_features(feats: FeatureMatrix) -> str:
    if feats.rows == 0:
        return ""
    out = io.StringIO()
    np.savetxt(out, feats.values, fmt=FLOAT_FORMAT, delimiter=",")
    return out.getvalue()


# -------------------------
# Curvature maps
# -------------------------


def write_curvature(curv: EdgeCurvature) -> str:
    """`u v value` per edge in lexicographic order, 17 significant digits."""
    return "".join(f"{u} {v} {format_float(value)}\n" for (u, v), value in curv.items())


def read_curvature(source: TextSource, name: str = "<curvature>", graph: Optional[Graph] = None) -> EdgeCurvature:
    values: Dict[Edge, float] = {}
    for number, line in _meaningful(source, name):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v value', got {line!r}", name, number)
        u, v = _int(parts[0], name, number), _int(parts[1], name, number)
        try:
            value = float(parts[2])
        except ValueError:
            raise ParseError(f"curvature must be a number, got {parts[2]!r}", name, number) from None
        if not u < v:
            raise InvariantViolation("canonical edge (u < v)", f"({u},{v})", f"{name}:{number}")
        if (u, v) in values:
            raise InvariantViolation("one entry per edge", f"({u},{v}) repeated", f"{name}:{number}")
        if not math.isfinite(value):
            raise InvariantViolation("finite curvature", f"({u},{v}) = {parts[2]}", f"{name}:{number}")
        values[(u, v)] = value
    if graph is not None and values.keys() != set(graph.edges):
        raise InvariantViolation("one entry per edge", "curvature edges differ from the graph's edges", name)
    return EdgeCurvature(values)


# -------------------------
# Pool assignments
# -------------------------


def write_pools(pools: PoolAssignment) -> str:
    return json.dumps({"pools": [list(members) for members in pools.pools]}) + "\n"


def read_pools(source: TextSource, name: str = "<pools>", num_nodes: Optional[int] = None) -> PoolAssignment:
    """Parse `{"pools": [[...], ...]}`; overlaps and gaps raise InvariantViolation."""
    text = _text(source, name)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, name, exc.lineno) from None
    raw = data.get("pools") if isinstance(data, dict) else None
    if not isinstance(raw, list) or not all(
        isinstance(p, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in p) for p in raw
    ):
        raise ParseError("expected an object with 'pools': list of integer lists", name)
    n = num_nodes
    if n is None:
        n = 1 + max((x for p in raw for x in p), default=-1)
    for index, members in enumerate(raw):
        if len(set(members)) != len(members):
            raise InvariantViolation("disjoint pools", f"pool {index} repeats a node", name)
        if any(x < 0 for x in members):
            raise InvariantViolation("index range", f"negative node in pool {index}", name)
    pools = PoolAssignment.from_pools(n, raw, location=name)
    if [list(m) for m in pools.pools] != [sorted(m) for m in raw]:
        raise InvariantViolation("pool ordering", "pools must be ascending lists sorted by minimum member", name)
    return pools


# -------------------------
# Reports
# -------------------------


def write_report(report: PoolingReport) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def read_report(source: TextSource, name: str = "<report>") -> PoolingReport:
    text = _text(source, name)
    try:
        return PoolingReport.model_validate_json(text)
    except ValidationError as exc:
        raise InvariantViolation("pooling report", str(exc), name) from None
