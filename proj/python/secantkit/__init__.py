"""Exact joins and secants of monomial ideals, with combinatorial certificates."""

from ._secantkit import (
    Graph,
    Ideal,
    PointConfiguration,
    Triangulation,
    alexander_dual,
    antichain_secant_of_family,
    chromatic_number,
    cyclic_polytope_crosscheck,
    cyclic_polytope_facets,
    edge_ideal,
    irreducible_decomposition,
    is_full,
    is_perfect,
    join,
    lex_triangulation,
    minor_check,
    named_config,
    nonedge_graph,
    odd_holes,
    r_partitionable,
    rook_placement,
    secant,
    secant_edge_ideal,
    standard_monomials,
    triangulation_from_simplices,
    validate_triangulation,
)

__all__ = [
    "Graph",
    "Ideal",
    "PointConfiguration",
    "Triangulation",
    "alexander_dual",
    "antichain_secant_of_family",
    "chromatic_number",
    "cyclic_polytope_crosscheck",
    "cyclic_polytope_facets",
    "edge_ideal",
    "irreducible_decomposition",
    "is_full",
    "is_perfect",
    "join",
    "lex_triangulation",
    "minor_check",
    "named_config",
    "nonedge_graph",
    "odd_holes",
    "r_partitionable",
    "rook_placement",
    "secant",
    "secant_edge_ideal",
    "standard_monomials",
    "triangulation_from_simplices",
    "validate_triangulation",
]
