"""Exact classification engine for incidence scrolls in projective n-space."""

from .bases import (
    EmptyIncidenceError,
    IncidenceBase,
    JoinResult,
    canonicalize,
    conditions_count,
    enumerate_bases,
    format_base,
    is_nondegenerate,
    join,
    parse_base,
    restrict_to_span,
    satisfies_is,
    separate,
)
from .closed_forms import ClosedFormRecord, TableRow, p1s, p2s, p3s, table
from .grassmann import (
    CycleSum,
    GrassmannSpec,
    SchubertIndex,
    codimension,
    coefficient_of,
    intersection_number,
    multiply_sum,
    pieri_multiply,
    product_of_specials,
    render,
    w,
)
from .invariants import (
    DegenerationNode,
    ScrollReport,
    UnresolvedDegenerationError,
    classify,
    degeneration_tree,
    degree,
    directrix_degree,
    genus,
    kappa,
    speciality,
)

__all__ = [
    "CycleSum", "GrassmannSpec", "SchubertIndex", "codimension",
    "coefficient_of", "intersection_number", "multiply_sum", "pieri_multiply",
    "product_of_specials", "render", "w",
    "EmptyIncidenceError", "IncidenceBase", "JoinResult", "canonicalize",
    "conditions_count", "enumerate_bases", "format_base", "is_nondegenerate",
    "join", "parse_base", "restrict_to_span", "satisfies_is", "separate",
    "DegenerationNode", "ScrollReport", "UnresolvedDegenerationError",
    "classify", "degeneration_tree", "degree", "directrix_degree", "genus",
    "kappa", "speciality",
    "ClosedFormRecord", "TableRow", "p1s", "p2s", "p3s", "table",
]
