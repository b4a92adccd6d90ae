"""Tree-child networks, lineage taxon strings and shortest common supersequences.

Trees are Newick strings, networks extended-Newick strings, sequences lists
of taxon names.
"""

from ._core import (
    BudgetError,
    GraphError,
    InputError,
    TextParseError,
    anchor_chain,
    assemble_supersequence,
    canonical_form,
    construct_network,
    displayed_line_trees,
    encode_2scs,
    exact_scs,
    hardness_instance,
    hybridization_number,
    is_displayed,
    is_line_tree,
    is_supersequence,
    is_tree_child,
    line_tree_from_permutation,
    lineage_taxon_strings,
    majority_merge,
    one_component_network,
    permutation_from_line_tree,
    reconstruct_permutation,
    scs_length,
    solve_line_trees_fast,
    solve_min_tcn,
    verify_equivalence,
)

__all__ = [
    "BudgetError",
    "GraphError",
    "InputError",
    "TextParseError",
    "anchor_chain",
    "assemble_supersequence",
    "canonical_form",
    "construct_network",
    "displayed_line_trees",
    "encode_2scs",
    "exact_scs",
    "hardness_instance",
    "hybridization_number",
    "is_displayed",
    "is_line_tree",
    "is_supersequence",
    "is_tree_child",
    "line_tree_from_permutation",
    "lineage_taxon_strings",
    "majority_merge",
    "one_component_network",
    "permutation_from_line_tree",
    "reconstruct_permutation",
    "scs_length",
    "solve_line_trees_fast",
    "solve_min_tcn",
    "verify_equivalence",
]
