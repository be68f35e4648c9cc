"""Exact combinatorics of Latin hypercubes over a finite carrier and
the operad they form: representation, verification, composition, group
actions, transversals, enumeration, and cross-checking oracles."""

__version__ = "0.1.0"

from .cellgraph import GraphStats, HypercubeGraph, graph_stats, hypercube_graph
from .core import (
    CeilingError,
    CellSet,
    LatinOp,
    RawOp,
    ValidationError,
    conjugate,
    function_of,
    graph_of,
    is_latin,
    is_latin_cellset,
)
from .enumeration import (
    Paratopism,
    apply_paratopism,
    canonical_form,
    count_all,
    enumerate_all,
    orbit_census,
    paratopism_group_order,
    random_latin,
)
from .formats import (
    FormatError,
    emit_lhc,
    emit_lhcs,
    emit_tsv,
    parse_lhc,
    parse_lhcs,
    parse_tsv,
)
from .morphisms import automorphisms, is_homomorphism
from .operad import (
    OperadReport,
    SlotPermutation,
    act,
    block_permutation,
    compose_at,
    compose_perm_at,
    embed_permutation,
    unit,
    verify_operad_axioms,
)
from .pullback import projection_tau, pullback_compose, restrict
from .transversal import (
    DeltaReport,
    Transversal,
    alternating_sum,
    count_transversals,
    delta_check,
    find_transversals,
)

__all__ = [
    "CeilingError",
    "CellSet",
    "DeltaReport",
    "FormatError",
    "GraphStats",
    "HypercubeGraph",
    "LatinOp",
    "OperadReport",
    "Paratopism",
    "RawOp",
    "SlotPermutation",
    "Transversal",
    "ValidationError",
    "act",
    "alternating_sum",
    "apply_paratopism",
    "automorphisms",
    "block_permutation",
    "canonical_form",
    "compose_at",
    "compose_perm_at",
    "conjugate",
    "count_all",
    "count_transversals",
    "delta_check",
    "embed_permutation",
    "emit_lhc",
    "emit_lhcs",
    "emit_tsv",
    "enumerate_all",
    "find_transversals",
    "function_of",
    "graph_of",
    "graph_stats",
    "hypercube_graph",
    "is_homomorphism",
    "is_latin",
    "is_latin_cellset",
    "orbit_census",
    "paratopism_group_order",
    "parse_lhc",
    "parse_lhcs",
    "parse_tsv",
    "projection_tau",
    "pullback_compose",
    "random_latin",
    "restrict",
    "unit",
    "verify_operad_axioms",
]
