"""Fundamental cycles, anti-nef tests and bounded brute-force lattice searches.

The oracles scan every cycle in a coefficient box. Scans are streamed in
fixed-size numpy blocks (lexicographic order, int64) so memory stays bounded
while E8-sized boxes of ~10^7 cycles finish in seconds.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, OracleBoundError, OracleMismatch
from .graph import Cycle, DualGraph, canonical_intersections, intersect, products

BLOCK = 1 << 16
_INT64_SAFE = 1 << 40


@dataclass(frozen=True)
class SupportSet:
    """Nonempty connected set of vertices, stored in canonical order."""

    graph: DualGraph
    ids: tuple[str, ...]

    def __post_init__(self) -> None:
        ids = tuple(dict.fromkeys(self.ids))
        if not ids:
            raise DomainError("support set is empty")
        for v in ids:
            self.graph.index(v)
        if not self.graph.is_connected_subset(ids):
            raise DomainError(f"support {list(ids)} is not connected")
        object.__setattr__(self, "ids", tuple(sorted(ids, key=self.graph.index)))

    @classmethod
    def of(cls, graph: DualGraph, support: "SupportSet | Iterable[str] | Cycle | None") -> "SupportSet":
        if isinstance(support, SupportSet):
            if support.graph != graph:
                raise DomainError("support set belongs to another graph")
            return support
        if support is None:
            return cls(graph, graph.ids)
        if isinstance(support, Cycle):
            if support.graph != graph:
                raise DomainError("support cycle belongs to another graph")
            return cls(graph, support.support)
        return cls(graph, tuple(support))

    def reduced(self) -> Cycle:
        return self.graph.reduced(self.ids)

    def __contains__(self, vid: str) -> bool:
        return vid in self.ids

    def __len__(self) -> int:
        return len(self.ids)


def is_anti_nef(d: Cycle, support: SupportSet | Iterable[str] | None = None) -> bool:
    """``D.E_i <= 0`` for every ``E_i`` in ``support`` (all of E by default)."""
    if not d.is_effective:
        raise DomainError(f"is_anti_nef expects an effective cycle, got {d}")
    ids = d.graph.ids if support is None else SupportSet.of(d.graph, support).ids
    prods = products(d)
    return all(prods[d.graph.index(v)] <= 0 for v in ids)


def laufer_sequence(graph: DualGraph, support=None) -> tuple[Cycle, int]:
    """Run Laufer's algorithm; return the fundamental cycle and the number of additions."""
    graph.require_negative_definite()
    s = SupportSet.of(graph, support)
    idx = [graph.index(v) for v in s.ids]
    m = graph.matrix
    z = [0] * len(graph)
    for i in idx:
        z[i] = 1
    prods = [sum(m[i][j] * z[j] for j in range(len(z))) for i in range(len(z))]
    steps = 0
    while True:
        # lowest canonical index first keeps the step trace reproducible
        hit = next((i for i in idx if prods[i] > 0), None)
        if hit is None:
            return Cycle(graph, tuple(z)), steps
        z[hit] += 1
        steps += 1
        for j in range(len(z)):
            prods[j] += m[j][hit]


def fundamental_cycle(graph: DualGraph, support=None) -> Cycle:
    """Minimal cycle with support exactly ``support`` that is anti-nef on it."""
    return laufer_sequence(graph, support)[0]


def degree(graph: DualGraph) -> int:
    z = fundamental_cycle(graph)
    return -intersect(z, z)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_effective_cycles(graph: DualGraph, bound: Cycle) -> Iterator[Cycle]:
    """All cycles ``0 < D <= bound`` in lexicographic (canonical vertex) order."""
    if bound.graph != graph:
        raise DomainError("bound belongs to another graph")
    if not bound.is_effective:
        raise DomainError(f"bound must be effective, got {bound}")
    ranges = [range(b + 1) for b in bound.coefficients]
    it = itertools.product(*ranges)
    next(it)  # the zero cycle
    for coeffs in it:
        yield Cycle(graph, coeffs)


def cycle_blocks(
    lower: Iterable[int], upper: Iterable[int], block: int = BLOCK
) -> Iterator[np.ndarray]:
    """Rows of the box ``lower <= D <= upper`` in lexicographic order, ``block`` rows at a time.

    The zero row is skipped so that every yielded row is a positive cycle
    when ``lower`` is effective.
    """
    lower = np.asarray(list(lower), dtype=np.int64)
    upper = np.asarray(list(upper), dtype=np.int64)
    if np.any(upper < lower):
        return
    radix = upper - lower + 1
    total = math.prod(int(r) for r in radix)
    skip_zero = not np.any(lower)
    for start in range(1 if skip_zero else 0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        rows = np.empty((idx.size, radix.size), dtype=np.int64)
        for col in range(radix.size - 1, -1, -1):
            idx, rows[:, col] = np.divmod(idx, radix[col])
        yield rows + lower


class _Lattice:
    """Vectorized products and chi for blocks of cycles on one graph."""

    def __init__(self, graph: DualGraph, bound: Iterable[int]):
        self.m = np.array(graph.matrix, dtype=np.int64)
        k = canonical_intersections(graph)
        self.k = np.array([k[v] for v in graph.ids], dtype=np.int64)
        scale = int(np.abs(self.m).sum()) + int(np.abs(self.k).sum()) + 1
        top = max(list(bound) + [1])
        if scale * top * top * len(graph) >= _INT64_SAFE:
            raise OracleBoundError("enumeration bound too large for exact int64 evaluation")

    def products(self, rows: np.ndarray) -> np.ndarray:
        return rows @ self.m

    def chi(self, rows: np.ndarray, prods: np.ndarray | None = None) -> np.ndarray:
        if prods is None:
            prods = self.products(rows)
        twice = (rows * prods).sum(axis=1) + rows @ self.k
        return -(twice // 2)


def oracle_minimal_anti_nef(
    graph: DualGraph, support=None, bound_multiplier: int = 2, bound: Cycle | None = None
) -> Cycle:
    """Exhaustive minimal anti-nef cycle with support exactly ``support``.

    Scans every cycle below ``bound`` (default ``bound_multiplier`` times the
    fundamental cycle) with support exactly ``support`` and returns the least
    anti-nef one. If the anti-nef set has several minimal elements an
    :class:`OracleMismatch` is raised.
    """
    if bound_multiplier < 1:
        raise DomainError("bound_multiplier must be positive")
    s = SupportSet.of(graph, support)
    if bound is None:
        bound = bound_multiplier * fundamental_cycle(graph, s)
    inside = np.array([v in s for v in graph.ids])
    lower = inside.astype(np.int64)
    upper = np.where(inside, np.asarray(bound.coefficients, dtype=np.int64), 0)
    lat = _Lattice(graph, upper.tolist())
    cols = inside.nonzero()[0]
    least = None
    for rows in cycle_blocks(lower, upper):
        ok = (lat.products(rows)[:, cols] <= 0).all(axis=1)
        if ok.any():
            block_min = rows[ok].min(axis=0)
            least = block_min if least is None else np.minimum(least, block_min)
    if least is None:
        raise OracleBoundError(
            f"no anti-nef cycle on {list(s.ids)} below {bound}; raise the bound"
        )
    candidate = Cycle(graph, tuple(int(c) for c in least))
    # the coefficient-wise minimum lies in the box, so it was scanned
    if not is_anti_nef(candidate, s):
        raise OracleMismatch(f"anti-nef cycles on {list(s.ids)} have no unique minimum")
    return candidate


def anti_nef_cycles_below(graph: DualGraph, support, bound: Cycle) -> Iterator[Cycle]:
    """Every anti-nef cycle with support exactly ``support`` and ``<= bound``."""
    s = SupportSet.of(graph, support)
    inside = np.array([v in s for v in graph.ids])
    upper = np.where(inside, np.asarray(bound.coefficients, dtype=np.int64), 0)
    lat = _Lattice(graph, upper.tolist())
    cols = inside.nonzero()[0]
    for rows in cycle_blocks(inside.astype(np.int64), upper):
        ok = (lat.products(rows)[:, cols] <= 0).all(axis=1)
        for row in rows[ok]:
            yield Cycle(graph, tuple(int(c) for c in row))


def connected_subsets(graph: DualGraph, within: Iterable[str] | None = None) -> Iterator[tuple[str, ...]]:
    """Every nonempty connected vertex subset of ``within`` (default: all vertices)."""
    allowed = set(graph.ids if within is None else within)
    order = graph.index
    seen: set[frozenset[str]] = set()
    frontier = [frozenset([v]) for v in allowed]
    while frontier:
        nxt = []
        for s in frontier:
            if s in seen:
                continue
            seen.add(s)
            yield tuple(sorted(s, key=order))
            for v in s:
                for w in graph.adjacency[v]:
                    if w in allowed and w not in s:
                        nxt.append(s | {w})
        frontier = nxt
