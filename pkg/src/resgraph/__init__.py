"""Combinatorial invariants of resolution graphs of normal surface singularities."""

from .blowup import BlowupRecord, blow_up, blow_up_sequence, canonical_pullback_check, pullback, pullback_through
from .catalog import CATALOG, AnalyticHints, GraphDocument, load_document
from .classification import (
    ClassificationReport,
    classify,
    is_elliptic,
    is_minimally_elliptic,
    is_rational,
    minimally_elliptic_cycle,
    oracle_chi_nonnegative,
)
from .elliptic import (
    EllipticSequence,
    compute_B,
    elliptic_sequence,
    maxell_shape_check,
    pg_upper_bound,
    tomari_cycles,
    verify_canonical_identity,
    verify_tomari,
)
from .errors import (
    DisconnectedGraphError,
    DomainError,
    GraphFormatError,
    InconsistentInputError,
    OracleBoundError,
    OracleMismatch,
    ParseError,
    ResGraphError,
)
from .graph import (
    Cycle,
    DualGraph,
    Edge,
    QCycle,
    Vertex,
    arithmetic_genus,
    canonical_cycle,
    canonical_degree,
    canonical_intersections,
    d_perp,
    euler_chi,
    intersect,
    is_minimal_resolution_graph,
    is_negative_definite,
    is_numerically_gorenstein,
)
from .lattice import (
    SupportSet,
    degree,
    enumerate_effective_cycles,
    fundamental_cycle,
    is_anti_nef,
    laufer_sequence,
    oracle_minimal_anti_nef,
)
from .reduction import (
    ReductionReport,
    check_final_theorem_shape,
    is_pg_maximal_ideal_cycle,
    kato_colength,
    normal_reduction_number,
    q_range_if_elliptic,
    tomari_mpg_numeric_conditions,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticHints",
    "BlowupRecord",
    "CATALOG",
    "ClassificationReport",
    "Cycle",
    "DisconnectedGraphError",
    "DomainError",
    "DualGraph",
    "Edge",
    "EllipticSequence",
    "GraphDocument",
    "GraphFormatError",
    "InconsistentInputError",
    "OracleBoundError",
    "OracleMismatch",
    "ParseError",
    "QCycle",
    "ReductionReport",
    "ResGraphError",
    "SupportSet",
    "Vertex",
    "arithmetic_genus",
    "blow_up",
    "blow_up_sequence",
    "canonical_cycle",
    "canonical_degree",
    "canonical_intersections",
    "canonical_pullback_check",
    "check_final_theorem_shape",
    "classify",
    "compute_B",
    "d_perp",
    "degree",
    "elliptic_sequence",
    "enumerate_effective_cycles",
    "euler_chi",
    "fundamental_cycle",
    "intersect",
    "is_anti_nef",
    "is_elliptic",
    "is_minimal_resolution_graph",
    "is_minimally_elliptic",
    "is_negative_definite",
    "is_numerically_gorenstein",
    "is_pg_maximal_ideal_cycle",
    "is_rational",
    "kato_colength",
    "laufer_sequence",
    "load_document",
    "maxell_shape_check",
    "minimally_elliptic_cycle",
    "normal_reduction_number",
    "oracle_chi_nonnegative",
    "oracle_minimal_anti_nef",
    "pg_upper_bound",
    "pullback",
    "pullback_through",
    "q_range_if_elliptic",
    "tomari_cycles",
    "tomari_mpg_numeric_conditions",
    "verify_canonical_identity",
    "verify_tomari",
]
