"""Elliptic sequences and the numerical statements built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .classification import is_elliptic, minimally_elliptic_cycle
from .errors import DomainError
from .graph import (
    Cycle,
    DualGraph,
    canonical_cycle,
    d_perp,
    euler_chi,
    intersect,
    is_minimal_resolution_graph,
    is_numerically_gorenstein,
)
from .lattice import SupportSet, _Lattice, cycle_blocks, degree, fundamental_cycle, is_anti_nef


@dataclass(frozen=True)
class EllipticSequence:
    """``Z_{B_0} >= ... >= Z_{B_m}`` together with the supports ``B_i``."""

    supports: tuple[Cycle, ...]
    cycles: tuple[Cycle, ...]
    e_min: Cycle

    @property
    def m(self) -> int:
        return len(self.cycles) - 1

    @property
    def partial_sums(self) -> tuple[Cycle, ...]:
        out = []
        acc = self.cycles[0].graph.zero()
        for z in self.cycles:
            acc = acc + z
            out.append(acc)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "e_min": self.e_min.to_json(),
            "supports": [list(b.support) for b in self.supports],
            "cycles": [z.to_json() for z in self.cycles],
            "partial_sums": [c.to_json() for c in self.partial_sums],
        }


def _component_containing(graph: DualGraph, ids, core: tuple[str, ...]) -> tuple[str, ...]:
    for comp in graph.components(ids):
        if set(core) <= set(comp):
            return comp
    raise AssertionError(f"{list(core)} is not inside one component of {sorted(ids)}")


def _checked_base(graph: DualGraph, support) -> tuple[SupportSet, Cycle]:
    if not is_elliptic(graph):
        raise DomainError("elliptic sequence needs an elliptic graph")
    e_min = minimally_elliptic_cycle(graph)
    b = SupportSet.of(graph, support)
    if isinstance(support, Cycle) and not support.is_reduced:
        raise DomainError(f"B must be a reduced cycle, got {support}")
    if not set(e_min.support) <= set(b.ids):
        raise DomainError(f"B = {list(b.ids)} does not contain supp(E_min) = {list(e_min.support)}")
    return b, e_min


def elliptic_sequence(graph: DualGraph, support=None) -> EllipticSequence:
    """Iterate ``B_{i+1}`` = component of ``Z_{B_i}``-orthogonal curves around ``E_min``."""
    b, e_min = _checked_base(graph, support)
    supports, cycles = [], []
    ids = b.ids
    while True:
        z = fundamental_cycle(graph, ids)
        supports.append(graph.reduced(ids))
        cycles.append(z)
        if intersect(z, e_min) < 0:
            break
        orth = set(d_perp(z).support) & set(ids)
        nxt = _component_containing(graph, orth, e_min.support)
        if len(nxt) >= len(ids):
            raise AssertionError(f"B did not shrink at step {len(cycles)}")
        ids = nxt
    return EllipticSequence(tuple(supports), tuple(cycles), e_min)


def tomari_cycles(graph: DualGraph, support=None, bound_multiplier: int = 2) -> list[Cycle]:
    """Brute force: all ``0 < C <= k C_m`` on ``B`` that are anti-nef on ``B`` with ``chi = 0``."""
    if bound_multiplier < 1:
        raise DomainError("bound_multiplier must be positive")
    seq = elliptic_sequence(graph, support)
    b = seq.supports[0]
    upper = [bound_multiplier * c for c in seq.partial_sums[-1]]
    lat = _Lattice(graph, upper)
    cols = np.array([graph.index(v) for v in b.support])
    found = []
    for rows in cycle_blocks([0] * len(graph), upper):
        prods = lat.products(rows)
        ok = (prods[:, cols] <= 0).all(axis=1) & (lat.chi(rows, prods) == 0)
        found.extend(Cycle(graph, tuple(int(c) for c in row)) for row in rows[ok])
    return found


def verify_tomari(graph: DualGraph, support=None, bound_multiplier: int = 2) -> bool:
    seq = elliptic_sequence(graph, support)
    return set(tomari_cycles(graph, support, bound_multiplier)) == set(seq.partial_sums)


def pg_upper_bound(graph: DualGraph) -> int:
    """``m + 1`` for the elliptic sequence on E (numerically Gorenstein elliptic graphs)."""
    if not is_elliptic(graph):
        raise DomainError("p_g bound needs an elliptic graph")
    if not is_numerically_gorenstein(graph):
        raise DomainError("p_g bound needs a numerically Gorenstein graph")
    return elliptic_sequence(graph).m + 1


def _require_gorenstein_elliptic_minimal(graph: DualGraph) -> None:
    if not is_elliptic(graph):
        raise DomainError("graph is not elliptic")
    if not is_numerically_gorenstein(graph):
        raise DomainError("graph is not numerically Gorenstein")
    if not is_minimal_resolution_graph(graph):
        raise DomainError("graph has a smooth rational (-1)-curve; not a minimal resolution")


def verify_canonical_identity(graph: DualGraph) -> bool:
    """``Z_K`` equals the sum of the elliptic sequence on E."""
    _require_gorenstein_elliptic_minimal(graph)
    total = elliptic_sequence(graph).partial_sums[-1]
    return canonical_cycle(graph).coefficients == total.to_qcycle().coefficients


@dataclass(frozen=True)
class ShapeCheck:
    ok: bool
    chain: tuple[str, ...]
    m: int
    e_min_support: tuple[str, ...]
    problems: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "e_min_support": list(self.e_min_support),
            "chain": list(self.chain),
            "m": self.m,
            "problems": list(self.problems),
        }


def maxell_shape_check(graph: DualGraph) -> ShapeCheck:
    """Degree-one shape: ``supp(E_min)`` plus a (-2)-chain ``E_{m-1}, ..., E_0`` hung off it.

    ``chain`` lists the chain from the vertex meeting ``supp(E_min)`` to the
    free end. Also checks ``Z_i = E_min + E_{m-1} + ... + E_i``.
    """
    _require_gorenstein_elliptic_minimal(graph)
    if degree(graph) != 1:
        raise DomainError(f"shape test needs degree 1, graph has degree {degree(graph)}")
    seq = elliptic_sequence(graph)
    e_min = seq.e_min
    core = set(e_min.support)
    rest = [v for v in graph.ids if v not in core]
    problems: list[str] = []
    chain: list[str] = []

    if rest:
        for v in rest:
            vx = graph.vertex(v)
            if vx.genus != 0 or vx.self_intersection != -2:
                problems.append(f"{v} is not a rational (-2)-curve")
        inner = [e for e in graph.edges if e.a not in core and e.b not in core]
        cross = [e for e in graph.edges if (e.a in core) != (e.b in core)]
        if any(e.multiplicity != 1 for e in inner):
            problems.append("chain edge with multiplicity > 1")
        if len(inner) != len(rest) - 1 or not graph.is_connected_subset(rest):
            problems.append("non-core vertices do not form a chain")
        if sum(e.multiplicity for e in cross) != 1:
            problems.append("chain must meet supp(E_min) in exactly one point")
        if not problems:
            attach = cross[0].b if cross[0].a in core else cross[0].a
            nbrs = {v: [w for w in graph.adjacency[v] if w not in core] for v in rest}
            if any(len(ns) > 2 for ns in nbrs.values()) or len(nbrs[attach]) > 1:
                problems.append("chain is not attached at an end")
            else:
                chain = [attach]
                while len(chain) < len(rest):
                    chain.append(next(w for w in nbrs[chain[-1]] if w not in chain))
                if intersect(e_min, graph.basis(attach)) != 1:
                    problems.append(f"E_min . {attach} != 1")

    if len(chain) != seq.m and not problems:
        problems.append(f"chain length {len(chain)} differs from m = {seq.m}")
    if not problems:
        for i, z in enumerate(seq.cycles):
            expected = e_min + graph.reduced(chain[: seq.m - i])
            if z != expected:
                problems.append(f"Z_{i} = {z}, expected {expected}")
    return ShapeCheck(not problems, tuple(chain), seq.m, tuple(e_min.support), tuple(problems))


def compute_B(graph: DualGraph, z: Cycle) -> Cycle:
    """Maximal reduced connected ``B`` around ``supp(E_min)`` with ``Z.B = 0``."""
    if not is_elliptic(graph):
        raise DomainError("compute_B needs an elliptic graph")
    if not z.is_effective or not is_anti_nef(z):
        raise DomainError(f"{z} must be effective and anti-nef")
    e_min = minimally_elliptic_cycle(graph)
    if intersect(z, e_min) != 0:
        raise DomainError(f"Z.E_min = {intersect(z, e_min)} is not zero")
    comp = _component_containing(graph, d_perp(z).support, e_min.support)
    return graph.reduced(comp)


def sequence_chi_and_nef(seq: EllipticSequence) -> Optional[str]:
    """First violated property of the partial sums ``C_t``, or ``None``.

    Each ``C_t`` must be anti-nef on ``B`` with ``chi(C_t) = 0``.
    """
    b = seq.supports[0].support
    for t, c in enumerate(seq.partial_sums):
        if euler_chi(c) != 0:
            return f"chi(C_{t}) = {euler_chi(c)}"
        if not is_anti_nef(c, b):
            return f"C_{t} is not anti-nef on B"
    return None
