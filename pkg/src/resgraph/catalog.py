"""Graph documents on disk and the built-in example catalog."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .errors import GraphFormatError
from .graph import DualGraph, Edge, Vertex

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class AnalyticHints:
    """User-asserted analytic data. Never feeds a combinatorial result."""

    pg: Optional[int] = None
    gorenstein: Optional[bool] = None

    def to_json(self) -> dict:
        return {k: v for k, v in (("pg", self.pg), ("gorenstein", self.gorenstein)) if v is not None}


@dataclass(frozen=True)
class GraphDocument:
    graph: DualGraph
    analytic_hints: AnalyticHints = field(default_factory=AnalyticHints)
    schema_version: str = SCHEMA_VERSION
    description: str = ""

    def to_json(self) -> dict:
        out: dict[str, Any] = {"schema_version": self.schema_version, "graph": self.graph.to_dict()}
        hints = self.analytic_hints.to_json()
        if hints:
            out["analytic_hints"] = hints
        return out

    @classmethod
    def from_json(cls, data: Any) -> "GraphDocument":
        # a bare {"vertices": ..., "edges": ...} object is accepted as well
        if isinstance(data, dict) and "graph" in data:
            version = data.get("schema_version", SCHEMA_VERSION)
            if version != SCHEMA_VERSION:
                raise GraphFormatError(f"unsupported schema_version {version!r}")
            hints_raw = data.get("analytic_hints") or {}
            if not isinstance(hints_raw, dict):
                raise GraphFormatError("analytic_hints must be an object")
            pg = hints_raw.get("pg")
            gor = hints_raw.get("gorenstein")
            if pg is not None and (not isinstance(pg, int) or isinstance(pg, bool) or pg < 0):
                raise GraphFormatError("analytic_hints.pg must be a non-negative integer")
            if gor is not None and not isinstance(gor, bool):
                raise GraphFormatError("analytic_hints.gorenstein must be a boolean")
            return cls(DualGraph.from_dict(data["graph"]), AnalyticHints(pg, gor), version)
        return cls(DualGraph.from_dict(data))


def _chain(rows: list[tuple[str, int, int]], extra_edges=()) -> DualGraph:
    vertices = tuple(Vertex(v, w, g) for v, w, g in rows)
    edges = tuple(Edge(a[0], b[0]) for a, b in zip(rows, rows[1:])) + tuple(extra_edges)
    return DualGraph(vertices, edges)


def _e8() -> DualGraph:
    # Bourbaki labels: e1-e3-e4-e5-e6-e7-e8 with e2 hanging off e4
    vertices = tuple(Vertex(f"e{i}", -2, 0) for i in range(1, 9))
    pairs = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
    return DualGraph(vertices, tuple(Edge(f"e{a}", f"e{b}") for a, b in pairs))


def _triangle() -> DualGraph:
    vertices = tuple(Vertex(f"E{i}", -3, 0) for i in (1, 2, 3))
    return DualGraph(vertices, (Edge("E1", "E2"), Edge("E2", "E3"), Edge("E1", "E3")))


CATALOG: dict[str, GraphDocument] = {
    "A1": GraphDocument(_chain([("E", -2, 0)]), description="rational double point A1"),
    "E8": GraphDocument(_e8(), description="rational double point E8, Bourbaki vertex order"),
    "simple-elliptic-deg1": GraphDocument(
        _chain([("E", -1, 1)]), description="one elliptic curve with E^2 = -1"
    ),
    "laufer-chain": GraphDocument(
        _chain([("E2", -1, 1), ("E1", -2, 0), ("E0", -2, 0)]),
        description="Laufer's chain: elliptic E2 (-1) then two (-2)-curves",
    ),
    "genus2-deg2": GraphDocument(
        _chain([("E", -2, 2)]), description="cone over a genus 2 curve embedded by K_C"
    ),
    "cusp-triangle": GraphDocument(
        _triangle(), description="cusp: cycle of three rational (-3)-curves"
    ),
    "nonnegdef": GraphDocument(_chain([("E", 0, 0)]), description="not negative definite (error path)"),
}


def load_document(source: str) -> GraphDocument:
    """Load ``catalog:NAME`` or a JSON file path."""
    if source.startswith("catalog:"):
        name = source.split(":", 1)[1]
        try:
            return CATALOG[name]
        except KeyError:
            raise GraphFormatError(
                f"no catalog graph {name!r}; choose from {', '.join(CATALOG)}"
            ) from None
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {source}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"{source}: invalid JSON ({exc})") from None
    return GraphDocument.from_json(data)
