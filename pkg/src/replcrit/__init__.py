"""Exact colouring toolkit for vertex replication in colour-critical graphs."""

__version__ = "0.1.0"

from .coloring import (
    Coloring,
    CriticalityReport,
    chromatic_number,
    criticality,
    is_k_colorable,
    validate_coloring,
)
from .fractional import (
    FractionalSolution,
    fractional_gap_condition,
    fractional_chromatic_number,
    maximal_independent_sets,
)
from .gallai import GallaiGraph
from .graphs import Graph, emit_graph6, longest_path_order, parse_graph6
from .replication import ReplicatedGraph, replicate
from .signseq import encode_sigma, negate, precedes, z_parity
from .strolls import (
    AutomatonD,
    Pattern,
    Stroll,
    build_d,
    classify_sequence,
    compatible,
    find_stroll,
    is_valid_stroll,
    synthesize_coloring,
)
from .theorem import (
    classify_structural_case,
    complete_selection,
    conjecture_check,
    constructive_coloring,
    verify_theorem,
)

__all__ = [
    "AutomatonD",
    "Coloring",
    "CriticalityReport",
    "FractionalSolution",
    "GallaiGraph",
    "Graph",
    "Pattern",
    "ReplicatedGraph",
    "Stroll",
    "__version__",
    "build_d",
    "chromatic_number",
    "classify_structural_case",
    "classify_sequence",
    "compatible",
    "complete_selection",
    "conjecture_check",
    "criticality",
    "emit_graph6",
    "encode_sigma",
    "fractional_gap_condition",
    "find_stroll",
    "fractional_chromatic_number",
    "is_k_colorable",
    "is_valid_stroll",
    "longest_path_order",
    "maximal_independent_sets",
    "negate",
    "parse_graph6",
    "precedes",
    "constructive_coloring",
    "replicate",
    "synthesize_coloring",
    "validate_coloring",
    "verify_theorem",
    "z_parity",
]
