"""Rational / elliptic classification of a resolution graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, OracleMismatch
from .graph import (
    Cycle,
    DualGraph,
    QCycle,
    canonical_cycle,
    euler_chi,
    is_minimal_resolution_graph,
    is_numerically_gorenstein,
)
from .lattice import _Lattice, cycle_blocks, degree, fundamental_cycle


def chi_fundamental(graph: DualGraph) -> int:
    return euler_chi(fundamental_cycle(graph))


def is_rational(graph: DualGraph) -> bool:
    """Artin's criterion: ``chi(Z_E) = 1``."""
    return chi_fundamental(graph) == 1


def is_elliptic(graph: DualGraph) -> bool:
    """Wagreich's criterion: ``chi(Z_E) = 0``."""
    return chi_fundamental(graph) == 0


def oracle_chi_nonnegative(graph: DualGraph, bound_multiplier: int = 2) -> tuple[int, Cycle]:
    """Minimum of chi over ``0 < D <= k Z_E`` and the lexicographically first minimizer.

    Cross-checks the fast classification: an elliptic graph must have minimum
    0 and a rational one minimum 1, otherwise :class:`OracleMismatch`.
    """
    if bound_multiplier < 1:
        raise DomainError("bound_multiplier must be positive")
    upper = [bound_multiplier * c for c in fundamental_cycle(graph)]
    lat = _Lattice(graph, upper)
    best: Optional[int] = None
    best_row = None
    for rows in cycle_blocks([0] * len(graph), upper):
        chi = lat.chi(rows)
        i = int(np.argmin(chi))
        if best is None or chi[i] < best:
            best, best_row = int(chi[i]), rows[i]
    assert best is not None
    attained = Cycle(graph, tuple(int(c) for c in best_row))
    chi_z = chi_fundamental(graph)
    if chi_z == 0 and best != 0:
        raise OracleMismatch(f"elliptic graph but min chi = {best} at {attained}")
    if chi_z == 1 and best != 1:
        raise OracleMismatch(f"rational graph but min chi = {best} at {attained}")
    return best, attained


def minimally_elliptic_cycle(graph: DualGraph) -> Cycle:
    """The least positive cycle with ``chi = 0``.

    Every chi-zero cycle dominates it and ``Z_E`` is one of them, so the box
    ``0 < D <= Z_E`` is enough.
    """
    if not is_elliptic(graph):
        raise DomainError("minimally elliptic cycle needs an elliptic graph")
    z = fundamental_cycle(graph)
    lat = _Lattice(graph, z.coefficients)
    least = None
    for rows in cycle_blocks([0] * len(graph), z.coefficients):
        hits = rows[lat.chi(rows) == 0]
        if hits.size:
            block_min = hits.min(axis=0)
            least = block_min if least is None else np.minimum(least, block_min)
    if least is None:
        raise OracleMismatch("chi(Z_E) = 0 but Z_E was not found by the scan")
    e_min = Cycle(graph, tuple(int(c) for c in least))
    if e_min.is_zero or euler_chi(e_min) != 0:
        raise OracleMismatch("cycles with chi = 0 have no unique minimum")
    if not graph.is_connected_subset(e_min.support):
        raise OracleMismatch(f"minimally elliptic cycle {e_min} has disconnected support")
    return e_min


def is_minimally_elliptic(graph: DualGraph) -> bool:
    if not is_elliptic(graph):
        raise DomainError("is_minimally_elliptic needs an elliptic graph")
    return is_minimal_resolution_graph(graph) and fundamental_cycle(graph) == minimally_elliptic_cycle(graph)


@dataclass(frozen=True)
class ClassificationReport:
    is_rational: bool
    is_elliptic: bool
    chi_fundamental: int
    minimally_elliptic_cycle: Optional[Cycle]
    is_minimally_elliptic: Optional[bool]
    is_numerically_gorenstein: bool
    degree: int
    canonical_cycle: QCycle
    is_minimal_resolution_graph: bool
    fundamental_cycle: Cycle

    @property
    def kind(self) -> str:
        if self.is_rational:
            return "rational"
        return "elliptic" if self.is_elliptic else "neither"

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "is_rational": self.is_rational,
            "is_elliptic": self.is_elliptic,
            "chi_fundamental": self.chi_fundamental,
            "fundamental_cycle": self.fundamental_cycle.to_json(),
            "degree": self.degree,
            "minimally_elliptic_cycle": (
                None if self.minimally_elliptic_cycle is None else self.minimally_elliptic_cycle.to_json()
            ),
            "is_minimally_elliptic": self.is_minimally_elliptic,
            "is_numerically_gorenstein": self.is_numerically_gorenstein,
            "canonical_cycle": self.canonical_cycle.to_json(),
            "is_minimal_resolution_graph": self.is_minimal_resolution_graph,
        }


def classify(graph: DualGraph) -> ClassificationReport:
    graph.require_negative_definite()
    z = fundamental_cycle(graph)
    chi = euler_chi(z)
    if chi > 1:
        raise OracleMismatch(f"chi(Z_E) = {chi} > 1 on a negative definite graph")
    elliptic = chi == 0
    e_min = minimally_elliptic_cycle(graph) if elliptic else None
    minimal = is_minimal_resolution_graph(graph)
    return ClassificationReport(
        is_rational=chi == 1,
        is_elliptic=elliptic,
        chi_fundamental=chi,
        minimally_elliptic_cycle=e_min,
        is_minimally_elliptic=(minimal and z == e_min) if elliptic else None,
        is_numerically_gorenstein=is_numerically_gorenstein(graph),
        degree=degree(graph),
        canonical_cycle=canonical_cycle(graph),
        is_minimal_resolution_graph=minimal,
        fundamental_cycle=z,
    )
