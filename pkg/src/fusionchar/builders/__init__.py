"""Constructors for groups, group algebras, Taft algebras, Drinfeld doubles and bundled fixtures."""
from .double import double_module, drinfeld_double, sweedler_double
from .fixtures import (TAFT_PARAMETERS, cayley_tables, data_documents, data_path, fibonacci_modular,
                       fibonacci_ring, fixtures, golden_ratio, group_ring, hopf_fixtures,
                       ising_modular, ising_ring, rep_ring_cyclic, rep_ring_of_group, rep_ring_q8,
                       rep_ring_s3, trivial_modular, trivial_ring, write_data)
from .groups import (CayleyTable, ConjugacyData, burnside_chartable, cayley_from_permutations,
                     conjugacy_data, cyclic_group, cyclic_group_algebra, group_algebra, load_cayley,
                     quaternion_group, symmetric_group_3)
from .taft import taft_algebra, taft_class_function_basis

__all__ = [
    "CayleyTable", "ConjugacyData", "burnside_chartable", "cayley_from_permutations",
    "conjugacy_data", "cyclic_group", "cyclic_group_algebra", "group_algebra", "load_cayley",
    "quaternion_group", "symmetric_group_3", "taft_algebra", "taft_class_function_basis",
    "drinfeld_double", "double_module", "sweedler_double", "fixtures", "hopf_fixtures",
    "cayley_tables", "data_documents", "data_path", "write_data", "TAFT_PARAMETERS",
    "golden_ratio", "trivial_ring", "fibonacci_ring", "ising_ring", "group_ring",
    "rep_ring_cyclic", "rep_ring_s3", "rep_ring_q8", "rep_ring_of_group", "trivial_modular",
    "fibonacci_modular", "ising_modular",
]
