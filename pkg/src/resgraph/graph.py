"""Weighted dual graphs, integral and rational cycles, and intersection arithmetic.

Every number here is an ``int`` or a ``fractions.Fraction``; there is no
floating point anywhere in the package.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Iterable, Iterator, Mapping, Sequence, Union

from . import linalg
from .errors import DisconnectedGraphError, DomainError, GraphFormatError


@dataclass(frozen=True)
class Vertex:
    id: str
    self_intersection: int
    genus: int = 0


@dataclass(frozen=True)
class Edge:
    a: str
    b: str
    multiplicity: int = 1


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True)
class DualGraph:
    """Connected weighted graph of exceptional curves.

    Vertex order is canonical: cycle coefficients, matrices and all output
    follow it. Negative definiteness is *not* required at construction so
    that degenerate graphs can still be loaded and diagnosed; operations that
    need it call :meth:`require_negative_definite`.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.vertices:
            raise GraphFormatError("graph has no vertices")
        seen: set[str] = set()
        for v in self.vertices:
            if not isinstance(v.id, str) or not v.id:
                raise GraphFormatError(f"vertex id must be a non-empty string, got {v.id!r}")
            if v.id in seen:
                raise GraphFormatError(f"duplicate vertex id {v.id!r}")
            if not _is_int(v.self_intersection):
                raise GraphFormatError(f"self_intersection of {v.id!r} must be an integer")
            if not _is_int(v.genus) or v.genus < 0:
                raise GraphFormatError(f"genus of {v.id!r} must be a non-negative integer")
            seen.add(v.id)
        pairs: set[frozenset[str]] = set()
        for e in self.edges:
            if e.a not in seen or e.b not in seen:
                raise GraphFormatError(f"edge {e.a!r}-{e.b!r} references an unknown vertex")
            if e.a == e.b:
                raise GraphFormatError(f"self-loop at {e.a!r} is not allowed")
            if not _is_int(e.multiplicity) or e.multiplicity < 1:
                raise GraphFormatError(f"edge {e.a!r}-{e.b!r} needs a positive integer multiplicity")
            pair = frozenset((e.a, e.b))
            if pair in pairs:
                raise GraphFormatError(f"more than one edge record for {e.a!r}-{e.b!r}")
            pairs.add(pair)
        if len(self.components(self.ids)) != 1:
            raise DisconnectedGraphError("dual graph is not connected")

    # -- structure ---------------------------------------------------------

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.ids)}

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, vid: str) -> int:
        try:
            return self._index[vid]
        except KeyError:
            raise DomainError(f"unknown vertex {vid!r}") from None

    def vertex(self, vid: str) -> Vertex:
        return self.vertices[self.index(vid)]

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for i, v in enumerate(self.vertices):
            m[i][i] = v.self_intersection
        for e in self.edges:
            i, j = self._index[e.a], self._index[e.b]
            m[i][j] = m[j][i] = e.multiplicity
        return tuple(tuple(row) for row in m)

    @cached_property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        adj: dict[str, list[str]] = {v: [] for v in self.ids}
        for e in self.edges:
            adj[e.a].append(e.b)
            adj[e.b].append(e.a)
        order = self._index
        return {v: tuple(sorted(ns, key=order.__getitem__)) for v, ns in adj.items()}

    def components(self, ids: Iterable[str]) -> list[tuple[str, ...]]:
        """Connected components of the induced subgraph, each in canonical order."""
        order = self._index
        adj: dict[str, set[str]] = {}
        for e in self.edges:
            adj.setdefault(e.a, set()).add(e.b)
            adj.setdefault(e.b, set()).add(e.a)
        todo = set(ids)
        comps = []
        for start in sorted(todo, key=order.__getitem__):
            if start not in todo:
                continue
            todo.discard(start)
            comp = [start]
            queue = deque([start])
            while queue:
                for w in adj.get(queue.popleft(), ()):
                    if w in todo:
                        todo.discard(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(comp, key=order.__getitem__)))
        return comps

    def is_connected_subset(self, ids: Iterable[str]) -> bool:
        return len(self.components(ids)) == 1

    def induced(self, ids: Iterable[str]) -> "DualGraph":
        keep = set(ids)
        for v in keep:
            self.index(v)
        return DualGraph(
            tuple(v for v in self.vertices if v.id in keep),
            tuple(e for e in self.edges if e.a in keep and e.b in keep),
        )

    @cached_property
    def negative_definite(self) -> bool:
        return all(
            (m < 0 if k % 2 else m > 0)
            for k, m in enumerate(linalg.leading_principal_minors(self.matrix), start=1)
        )

    def require_negative_definite(self) -> None:
        if not self.negative_definite:
            raise DomainError("intersection matrix is not negative definite")

    # -- cycle constructors ----------------------------------------------

    def cycle(self, coefficients: Mapping[str, int] | Sequence[int] = ()) -> "Cycle":
        return Cycle(self, _coeff_tuple(self, coefficients, _strict_int))

    def qcycle(self, coefficients: Mapping[str, Any] | Sequence[Any] = ()) -> "QCycle":
        return QCycle(self, _coeff_tuple(self, coefficients, _strict_fraction))

    def zero(self) -> "Cycle":
        return Cycle(self, (0,) * len(self))

    def basis(self, vid: str) -> "Cycle":
        return self.cycle({vid: 1})

    def reduced(self, ids: Iterable[str] | None = None) -> "Cycle":
        """Reduced cycle (all coefficients 1) on ``ids``; the whole of E by default."""
        if ids is None:
            return Cycle(self, (1,) * len(self))
        return self.cycle({v: 1 for v in ids})

    # -- JSON --------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v.id, "self_intersection": v.self_intersection, "genus": v.genus}
                for v in self.vertices
            ],
            "edges": [{"a": e.a, "b": e.b, "multiplicity": e.multiplicity} for e in self.edges],
        }

    @classmethod
    def from_dict(cls, data: Any) -> "DualGraph":
        if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
            raise GraphFormatError('graph must be an object with a "vertices" list')
        edges_raw = data.get("edges", [])
        if not isinstance(edges_raw, list):
            raise GraphFormatError('"edges" must be a list')
        try:
            vertices = [
                Vertex(v["id"], v["self_intersection"], v.get("genus", 0)) for v in data["vertices"]
            ]
            edges = [Edge(e["a"], e["b"], e.get("multiplicity", 1)) for e in edges_raw]
        except (KeyError, TypeError, AttributeError) as exc:
            raise GraphFormatError(f"malformed vertex or edge record: {exc}") from None
        return cls(tuple(vertices), tuple(edges))


def _strict_int(x: Any) -> int:
    if _is_int(x):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    raise DomainError(f"cycle coefficient {x!r} is not an integer")


def _strict_fraction(x: Any) -> Fraction:
    if _is_int(x) or isinstance(x, Fraction):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            pass
    raise DomainError(f"rational coefficient {x!r} is not exact")


def _coeff_tuple(graph: DualGraph, coefficients, conv) -> tuple:
    if isinstance(coefficients, Mapping):
        out = [conv(0)] * len(graph)
        for vid, c in coefficients.items():
            out[graph.index(vid)] = conv(c)
        return tuple(out)
    coefficients = tuple(coefficients)
    if not coefficients:
        return (conv(0),) * len(graph)
    if len(coefficients) != len(graph):
        raise DomainError(f"expected {len(graph)} coefficients, got {len(coefficients)}")
    return tuple(conv(c) for c in coefficients)


# ---------------------------------------------------------------------------
# cycles


class _Divisor:
    graph: DualGraph
    coefficients: tuple

    def __getitem__(self, vid: str):
        return self.coefficients[self.graph.index(vid)]

    def __iter__(self) -> Iterator:
        return iter(self.coefficients)

    def as_dict(self) -> dict[str, Any]:
        return dict(zip(self.graph.ids, self.coefficients))

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(v for v, c in zip(self.graph.ids, self.coefficients) if c != 0)

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    @property
    def is_positive(self) -> bool:
        return self.is_effective and not self.is_zero

    def _check(self, other: "_Divisor") -> None:
        if other.graph is not self.graph and other.graph != self.graph:
            raise DomainError("cycles live on different graphs")

    def _combine(self, other, op):
        if not isinstance(other, _Divisor):
            return NotImplemented
        self._check(other)
        cls = QCycle if isinstance(self, QCycle) or isinstance(other, QCycle) else Cycle
        conv = Fraction if cls is QCycle else int
        return cls(self.graph, tuple(conv(op(a, b)) for a, b in zip(self.coefficients, other.coefficients)))

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        return type(self)(self.graph, tuple(-c for c in self.coefficients))

    def __mul__(self, k):
        if isinstance(self, Cycle) and _is_int(k):
            return Cycle(self.graph, tuple(k * c for c in self.coefficients))
        if isinstance(k, (int, Fraction)) and not isinstance(k, bool):
            return QCycle(self.graph, tuple(Fraction(k) * c for c in self.coefficients))
        return NotImplemented

    __rmul__ = __mul__

    # coefficient-wise partial order
    def __le__(self, other):
        if not isinstance(other, _Divisor):
            return NotImplemented
        self._check(other)
        return all(a <= b for a, b in zip(self.coefficients, other.coefficients))

    def __ge__(self, other):
        if not isinstance(other, _Divisor):
            return NotImplemented
        return other.__le__(self)

    def __lt__(self, other):
        le = self.__le__(other)
        return le if le is NotImplemented else le and tuple(self) != tuple(other)

    def __gt__(self, other):
        ge = self.__ge__(other)
        return ge if ge is NotImplemented else ge and tuple(self) != tuple(other)

    def __str__(self) -> str:
        terms = []
        for vid, c in zip(self.graph.ids, self.coefficients):
            if c == 0:
                continue
            if c == 1:
                terms.append(vid)
            elif c == -1:
                terms.append(f"-{vid}")
            else:
                terms.append(f"({c}){vid}" if isinstance(c, Fraction) and c.denominator != 1 else f"{c}{vid}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


@dataclass(frozen=True, repr=False)
class Cycle(_Divisor):
    """Integral cycle supported on the exceptional set."""

    graph: DualGraph
    coefficients: tuple[int, ...] = ()

    @property
    def is_reduced(self) -> bool:
        return all(c in (0, 1) for c in self.coefficients)

    def to_qcycle(self) -> "QCycle":
        return QCycle(self.graph, tuple(Fraction(c) for c in self.coefficients))

    def to_json(self) -> dict[str, int]:
        """Nonzero coefficients in canonical vertex order."""
        return {v: c for v, c in zip(self.graph.ids, self.coefficients) if c}


@dataclass(frozen=True, repr=False)
class QCycle(_Divisor):
    """Cycle with rational coefficients, e.g. the canonical cycle."""

    graph: DualGraph
    coefficients: tuple[Fraction, ...] = ()

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def to_cycle(self) -> Cycle:
        if not self.is_integral:
            raise DomainError(f"{self} has non-integral coefficients")
        return Cycle(self.graph, tuple(int(c) for c in self.coefficients))

    def to_json(self) -> dict[str, str]:
        return {v: format_rational(c) for v, c in zip(self.graph.ids, self.coefficients) if c}


AnyCycle = Union[Cycle, QCycle]


def format_rational(q: Fraction | int) -> str:
    """Serialize as ``"p/q"`` in lowest terms with ``q > 0`` (``3`` becomes ``"3/1"``)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# intersection theory


def intersect(d: AnyCycle, f: AnyCycle) -> int | Fraction:
    """Intersection number ``D.F``; an ``int`` when both cycles are integral."""
    d._check(f)
    m = d.graph.matrix
    total = sum(
        a * sum(mij * b for mij, b in zip(row, f.coefficients) if mij)
        for a, row in zip(d.coefficients, m)
        if a
    )
    if isinstance(d, Cycle) and isinstance(f, Cycle):
        return int(total)
    return Fraction(total)


def products(d: AnyCycle) -> tuple:
    """The vector ``(D.E_1, ..., D.E_n)``."""
    m = d.graph.matrix
    return tuple(sum(mij * c for mij, c in zip(row, d.coefficients)) for row in m)


def is_negative_definite(graph: DualGraph) -> bool:
    return graph.negative_definite


def canonical_intersections(graph: DualGraph) -> dict[str, int]:
    """``K.E_i`` for every vertex, from adjunction: ``2g - 2 = E_i^2 + K.E_i``."""
    return {v.id: -v.self_intersection + 2 * v.genus - 2 for v in graph.vertices}


def canonical_degree(d: AnyCycle) -> int | Fraction:
    """``K.D``."""
    k = canonical_intersections(d.graph).values()
    total = sum(a * b for a, b in zip(k, d.coefficients))
    return int(total) if isinstance(d, Cycle) else Fraction(total)


def euler_chi(d: Cycle) -> int:
    """``chi(O_D) = -(D^2 + K.D) / 2`` for an effective cycle ``D``."""
    if not isinstance(d, Cycle):
        raise DomainError("euler_chi needs an integral cycle")
    if not d.is_effective:
        raise DomainError(f"euler_chi needs an effective cycle, got {d}")
    twice = intersect(d, d) + canonical_degree(d)
    if twice % 2:
        raise AssertionError(f"D^2 + K.D is odd for {d}; adjunction violated")
    return -twice // 2


def arithmetic_genus(d: Cycle) -> int:
    if not d.is_positive:
        raise DomainError(f"arithmetic genus needs a positive cycle, got {d}")
    return 1 - euler_chi(d)


@lru_cache(maxsize=256)
def canonical_cycle(graph: DualGraph) -> QCycle:
    """The rational cycle ``Z_K`` with ``(K + Z_K).E_i = 0`` for every ``i``."""
    graph.require_negative_definite()
    k = canonical_intersections(graph)
    rhs = [-k[v] for v in graph.ids]
    return QCycle(graph, tuple(linalg.solve(graph.matrix, rhs)))


def is_numerically_gorenstein(graph: DualGraph) -> bool:
    return canonical_cycle(graph).is_integral


def d_perp(d: Cycle) -> Cycle:
    """Reduced cycle on the vertices orthogonal to ``D``."""
    if not d.is_effective:
        raise DomainError(f"d_perp needs an effective cycle, got {d}")
    return Cycle(d.graph, tuple(1 if p == 0 else 0 for p in products(d)))


def is_minimal_resolution_graph(graph: DualGraph) -> bool:
    """No smooth rational (-1)-curve, i.e. nothing contractible by Castelnuovo."""
    return not any(v.genus == 0 and v.self_intersection == -1 for v in graph.vertices)
