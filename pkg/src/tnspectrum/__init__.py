"""Exact spectra of transposition graphs.

A transposition graph has the n! permutations of n symbols as vertices and an
edge wherever two permutations differ by one transposition. All its adjacency
eigenvalues are integers, one per partition of n; this package computes the
full spectrum exactly with arbitrary-precision multiplicities, emits
closed-form witness partitions for small eigenvalues, and cross-checks the
whole pipeline against a brute-force graph build at small n.
"""

from .oracle import (
    CayleyGraph,
    ComparisonReport,
    NumericSpectrum,
    ORACLE_MAX_N,
    ORACLE_MIN_N,
    build_graph,
    compare,
    edge_list,
    numeric_spectrum,
    permutation_parity,
)
from .partitions import (
    DEFAULT_MAX_N,
    HookGrid,
    Partition,
    conjugate,
    degree,
    enumerate_partitions,
    hook_lengths,
    partition_count,
)
from .spectrum import (
    Spectrum,
    character_ratio,
    eigenvalue,
    eigenvalue_upper_bound,
    multiplicity,
    spectrum,
    top_eigenvalues,
)
from .witnesses import (
    NoWitnessError,
    WitnessReport,
    hook_partition,
    lambda_partition_even,
    lambda_partition_odd,
    min_n_for_prefix,
    one_partition,
    verify_witness,
    zero_partition,
)

__version__ = "0.1.0"

__all__ = [
    "CayleyGraph",
    "ComparisonReport",
    "DEFAULT_MAX_N",
    "HookGrid",
    "NoWitnessError",
    "NumericSpectrum",
    "ORACLE_MAX_N",
    "ORACLE_MIN_N",
    "Partition",
    "Spectrum",
    "WitnessReport",
    "build_graph",
    "character_ratio",
    "compare",
    "conjugate",
    "degree",
    "edge_list",
    "eigenvalue",
    "eigenvalue_upper_bound",
    "enumerate_partitions",
    "hook_lengths",
    "hook_partition",
    "lambda_partition_even",
    "lambda_partition_odd",
    "min_n_for_prefix",
    "multiplicity",
    "numeric_spectrum",
    "one_partition",
    "partition_count",
    "permutation_parity",
    "spectrum",
    "top_eigenvalues",
    "verify_witness",
    "zero_partition",
]
