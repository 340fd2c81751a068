"""Point blow-ups of a dual graph and the induced pullback of cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import DomainError
from .graph import (
    AnyCycle,
    Cycle,
    DualGraph,
    Edge,
    Vertex,
    canonical_degree,
    canonical_intersections,
    intersect,
)

Center = Union[str, tuple[str, str]]


@dataclass(frozen=True)
class BlowupRecord:
    old_graph: DualGraph
    new_graph: DualGraph
    new_vertex: str
    center: tuple[str, ...]

    def pullback(self, d: AnyCycle) -> AnyCycle:
        return pullback(self, d)

    @property
    def exceptional(self) -> Cycle:
        return self.new_graph.basis(self.new_vertex)

    def pullback_table(self) -> dict[str, dict[str, int]]:
        """``phi^* E_i`` for every old vertex."""
        return {v: pullback(self, self.old_graph.basis(v)).to_json() for v in self.old_graph.ids}


def parse_center(text: str) -> tuple[str, ...]:
    parts = tuple(p.strip() for p in text.split(",") if p.strip())
    if len(parts) not in (1, 2):
        raise DomainError(f"center must be 'id' or 'id,id', got {text!r}")
    return parts


def _fresh_id(graph: DualGraph) -> str:
    n = 1
    while f"F{n}" in graph.ids:
        n += 1
    return f"F{n}"


def blow_up(graph: DualGraph, center: Center, new_id: Optional[str] = None) -> BlowupRecord:
    """Blow up a free point of one curve (``"E"``) or a crossing of two (``("E", "F")``)."""
    graph.require_negative_definite()
    pts = (center,) if isinstance(center, str) else tuple(center)
    if len(pts) not in (1, 2) or len(set(pts)) != len(pts):
        raise DomainError(f"invalid blow-up center {center!r}")
    for v in pts:
        graph.index(v)
    new_id = new_id or _fresh_id(graph)
    if new_id in graph.ids:
        raise DomainError(f"vertex id {new_id!r} already in use")

    vertices = [
        Vertex(v.id, v.self_intersection - 1, v.genus) if v.id in pts else v for v in graph.vertices
    ]
    vertices.append(Vertex(new_id, -1, 0))
    edges = list(graph.edges)
    if len(pts) == 2:
        pair = set(pts)
        hit = next((i for i, e in enumerate(edges) if {e.a, e.b} == pair), None)
        if hit is None:
            raise DomainError(f"{pts[0]} and {pts[1]} do not meet")
        e = edges[hit]
        if e.multiplicity > 1:
            edges[hit] = Edge(e.a, e.b, e.multiplicity - 1)
        else:
            del edges[hit]
    edges.extend(Edge(v, new_id, 1) for v in pts)
    new_graph = DualGraph(tuple(vertices), tuple(edges))
    if not new_graph.negative_definite:
        raise AssertionError("blow-up of a negative definite graph is not negative definite")
    return BlowupRecord(graph, new_graph, new_id, pts)


def blow_up_sequence(graph: DualGraph, centers: Sequence[Center]) -> list[BlowupRecord]:
    """Successive blow-ups; each center is named on the graph produced so far."""
    records = []
    for c in centers:
        records.append(blow_up(graph, c))
        graph = records[-1].new_graph
    return records


def pullback(record: BlowupRecord, d: AnyCycle) -> AnyCycle:
    """Total transform: old coefficients kept, the new curve gets the multiplicity of ``D`` at the center."""
    if d.graph != record.old_graph:
        raise DomainError("cycle does not live on the blown-up graph")
    old = d.as_dict()
    coeff = sum(old[v] for v in record.center)
    coeffs = tuple(d.coefficients) + (coeff,)
    return type(d)(record.new_graph, coeffs)


def pullback_through(records: Iterable[BlowupRecord], d: AnyCycle) -> AnyCycle:
    for r in records:
        d = pullback(r, d)
    return d


def canonical_pullback_check(record: BlowupRecord, cycles: Iterable[AnyCycle] = ()) -> bool:
    """``K' = phi^* K + F``: ``K'.phi^*D = K.D`` for each ``D`` and ``K'.F = -1``.

    Every basis curve is checked, plus any extra ``cycles`` supplied.
    """
    k_new = canonical_intersections(record.new_graph)
    if k_new[record.new_vertex] != -1:
        return False
    f = record.exceptional
    test = [record.old_graph.basis(v) for v in record.old_graph.ids] + list(cycles)
    for d in test:
        pd = pullback(record, d)
        if canonical_degree(pd) != canonical_degree(d):
            return False
        if intersect(pd, f) != 0:
            return False
    return True

