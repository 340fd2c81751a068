"""Normal reduction number, Kato's colength formula and p_g-ideal tests.

Quantities such as ``p_g``, ``q(I)`` and Gorenstein-ness are analytic: the
graph does not determine them. They are accepted as user-supplied hints,
validated where the graph allows it, and every conclusion drawn from them
is reported as conditional.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .classification import classify, is_elliptic, is_rational
from .elliptic import maxell_shape_check, pg_upper_bound
from .errors import DomainError, InconsistentInputError
from .graph import (
    Cycle,
    DualGraph,
    arithmetic_genus,
    canonical_degree,
    euler_chi,
    intersect,
    is_minimal_resolution_graph,
    is_numerically_gorenstein,
)
from .lattice import fundamental_cycle, is_anti_nef

BASIS_RATIONAL = "Theorem: rbar(A) = 1 if and only if A is rational"
BASIS_ELLIPTIC = "Theorem: A elliptic implies rbar(A) = 2"
BASIS_UNKNOWN = "no theorem applies: neither rational nor elliptic"
BASIS_QRANGE = "Corollary: A elliptic implies Img_A(q) = {0, 1, ..., p_g(A)}"


@dataclass(frozen=True)
class ReductionReport:
    normal_reduction_number: Optional[int]
    basis: str
    kind: str
    q_range: Optional[range] = None

    @property
    def value_text(self) -> str:
        if self.normal_reduction_number is None:
            return "unknown (not determined by the graph)"
        return str(self.normal_reduction_number)

    def to_json(self) -> dict:
        return {
            "normal_reduction_number": self.normal_reduction_number,
            "value": self.value_text,
            "basis": self.basis,
            "kind": self.kind,
            "q_range": None if self.q_range is None else [self.q_range.start, self.q_range.stop - 1],
        }


def normal_reduction_number(graph: DualGraph, pg: Optional[int] = None) -> ReductionReport:
    """``rbar(A)`` when the graph forces it: 1 for rational, 2 for elliptic."""
    if is_rational(graph):
        return ReductionReport(1, BASIS_RATIONAL, "rational")
    if is_elliptic(graph):
        q_range = None if pg is None else q_range_if_elliptic(graph, pg)
        return ReductionReport(2, BASIS_ELLIPTIC, "elliptic", q_range)
    return ReductionReport(None, BASIS_UNKNOWN, "neither")


def _require_anti_nef_positive(graph: DualGraph, z: Cycle, what: str = "Z") -> None:
    if z.graph != graph:
        raise DomainError(f"{what} lives on another graph")
    if not z.is_positive:
        raise DomainError(f"{what} = {z} must be a positive cycle")
    if not is_anti_nef(z):
        raise DomainError(f"{what} = {z} is not anti-nef")


def kato_colength(graph: DualGraph, z: Cycle, q: int, pg: int) -> int:
    """``l(A/I_Z) = -(Z^2 + K.Z)/2 + p_g - q`` for the ideal represented by ``Z``."""
    _require_anti_nef_positive(graph, z)
    if q < 0 or pg < 0:
        raise InconsistentInputError("q and p_g must be non-negative")
    if q > pg:
        raise InconsistentInputError(f"q = {q} exceeds p_g = {pg}")
    colength = euler_chi(z) + pg - q
    if colength < 1:
        raise InconsistentInputError(
            f"colength {colength} < 1: Z = {z} with q = {q}, p_g = {pg} cannot represent an m-primary ideal"
        )
    return colength


def q_range_if_elliptic(graph: DualGraph, pg: int) -> range:
    """All of ``0..p_g`` is realised as ``q(I)`` on an elliptic singularity."""
    if not is_elliptic(graph):
        raise DomainError("q range is only guaranteed for elliptic graphs")
    if pg < 0:
        raise InconsistentInputError("p_g must be non-negative")
    if is_numerically_gorenstein(graph):
        bound = pg_upper_bound(graph)
        if pg > bound:
            raise InconsistentInputError(f"p_g = {pg} exceeds the elliptic-sequence bound m + 1 = {bound}")
    return range(pg + 1)


@dataclass(frozen=True)
class MaxIdealCycleCheck:
    ok: bool
    arithmetic_genus: int
    self_intersection: int
    canonical_degree: int

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "is_pg_cycle": self.ok,
            "p_a": self.arithmetic_genus,
            "M^2": self.self_intersection,
            "K.M": self.canonical_degree,
        }


def _require_max_ideal_candidate(graph: DualGraph, m: Cycle) -> None:
    _require_anti_nef_positive(graph, m, "M")
    z = fundamental_cycle(graph)
    if not m >= z:
        raise DomainError(f"M = {m} is not >= Z_E = {z}")


def is_pg_maximal_ideal_cycle(graph: DualGraph, m: Cycle) -> MaxIdealCycleCheck:
    """The maximal ideal represented by ``M`` is a p_g-ideal iff ``p_a(M) = 0``."""
    _require_max_ideal_candidate(graph, m)
    pa = arithmetic_genus(m)
    return MaxIdealCycleCheck(pa == 0, pa, intersect(m, m), canonical_degree(m))


@dataclass(frozen=True)
class FinalTheoremReport:
    candidate: bool
    is_elliptic: bool
    is_numerically_gorenstein: bool
    degree: int
    shape_ok: Optional[bool]
    m: Optional[int]
    conditional: str
    notes: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.candidate

    def to_json(self) -> dict:
        return {
            "combinatorial": {
                "candidate": self.candidate,
                "is_elliptic": self.is_elliptic,
                "is_numerically_gorenstein": self.is_numerically_gorenstein,
                "degree": self.degree,
                "shape_ok": self.shape_ok,
                "m": self.m,
                "notes": list(self.notes),
            },
            "conditional": self.conditional,
        }


def check_final_theorem_shape(graph: DualGraph) -> FinalTheoremReport:
    """Combinatorial half of: Gorenstein with p_g maximal ideal iff maximally elliptic of degree 1."""
    if not is_minimal_resolution_graph(graph):
        raise DomainError("graph has a smooth rational (-1)-curve; not a minimal resolution")
    report = classify(graph)
    shape = None
    m = None
    notes: list[str] = []
    if report.is_elliptic and report.is_numerically_gorenstein and report.degree == 1:
        check = maxell_shape_check(graph)
        shape, m = check.ok, check.m
        notes.extend(check.problems)
    candidate = bool(shape)
    if candidate:
        conditional = (
            f"if the analytic structure is maximally elliptic (p_g = m + 1 = {m + 1}), then A is "
            "Gorenstein and the maximal ideal is a p_g-ideal; p_g itself is not determined by the graph"
        )
    elif report.is_rational:
        conditional = "rational: p_g = 0, every integrally closed m-primary ideal is a p_g-ideal"
    else:
        conditional = "not a candidate: no analytic structure on this graph is Gorenstein with p_g maximal ideal"
    return FinalTheoremReport(
        candidate,
        report.is_elliptic,
        report.is_numerically_gorenstein,
        report.degree,
        shape,
        m,
        conditional,
        tuple(notes),
    )


@dataclass(frozen=True)
class MaxIdealNumerics:
    arithmetic_genus: int
    minus_self_intersection: int
    gorenstein_asserted: Optional[bool]
    predicted_multiplicity: Optional[int]
    consistent: Optional[bool]

    def to_json(self) -> dict:
        return {
            "combinatorial": {
                "p_a": self.arithmetic_genus,
                "-M^2": self.minus_self_intersection,
            },
            "conditional": {
                "mult_A_if_O(-M)_globally_generated": self.minus_self_intersection,
                "gorenstein_asserted": self.gorenstein_asserted,
                "predicted_mult_A": self.predicted_multiplicity,
                "consistent_with_-M^2": self.consistent,
            },
        }


def tomari_mpg_numeric_conditions(
    graph: DualGraph, m: Cycle, gorenstein: Optional[bool] = None
) -> MaxIdealNumerics:
    """Numerical side of Tomari's criterion for a candidate maximal ideal cycle ``M``.

    ``-M^2`` is the multiplicity only when ``O(-M)`` is globally generated,
    which the graph cannot certify. When ``p_a(M) = 0`` and the user asserts
    Gorenstein, the multiplicity must be 2.
    """
    _require_max_ideal_candidate(graph, m)
    pa = arithmetic_genus(m)
    minus_sq = -intersect(m, m)
    predicted = 2 if (pa == 0 and gorenstein) else None
    consistent = None if predicted is None else minus_sq == predicted
    return MaxIdealNumerics(pa, minus_sq, gorenstein, predicted, consistent)
