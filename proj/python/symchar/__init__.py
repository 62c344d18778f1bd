"""Exact symmetric-group character evaluation and counting reductions.

Thin wrapper over the compiled _core module; all integers are exact.
"""

from symchar._core import (
    char_instance_diff,
    char_jt,
    char_mn,
    column_sum,
    count_3dm,
    count_4dm,
    count_circuit_text,
    count_dimacs,
    count_ordered_partitions,
    count_with_fixed_pair,
    cycle_type,
    dimension,
    parsimonious_encode,
    partitions_of,
    phi_induced,
    reduce_matching_pair,
    row_sum,
    sort_desc,
    tseytin_dimacs,
    z_factor,
)

__all__ = [
    "char_instance_diff",
    "char_jt",
    "char_mn",
    "column_sum",
    "count_3dm",
    "count_4dm",
    "count_circuit_text",
    "count_dimacs",
    "count_ordered_partitions",
    "count_with_fixed_pair",
    "cycle_type",
    "dimension",
    "parsimonious_encode",
    "partitions_of",
    "phi_induced",
    "reduce_matching_pair",
    "row_sum",
    "sort_desc",
    "tseytin_dimacs",
    "z_factor",
]
