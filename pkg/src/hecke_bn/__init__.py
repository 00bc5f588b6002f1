"""Canonical basic sets for Hecke algebras of type B_n with unequal parameters."""

from .partitions import (
    Multipartition,
    Partition,
    bipartition,
    conjugate,
    dominates_bipartitions,
    dominates_partitions,
    enumerate_multipartitions,
    enumerate_partitions,
    is_e_regular,
    n_statistic,
)
from .afunction import WeightParams, a_value, a_value_closed, a_value_symmetric, build_symbol, is_L_good
from .jinduction import j_induce
from .fock import NodeOrder, crystal_graph, flotw_test, good_node, in_uglov, kleshchev_set, residue, uglov_set
from .basic_sets import SpecializationParams, basic_set, lambda_set, resolve_case
from .decomposition import DecompositionMatrix, extract_basic_set, load_matrix, verify_delta, verify_delta_a

__version__ = "0.1.0"
