"""Exact combinatorics: multisets, partitions, collapse maps, multiplicities."""
from .multiset import Multiset, MultisetPartition, multiset_factorial
from .partitions import (
    SetPartition,
    restricted_growth_strings,
    enumerate_set_partitions,
    stirling2,
    bell,
    enumerate_multiset_partitions,
    enumerate_integer_partitions,
    integer_partition_multiplicities,
)
from .collapse import (
    CollapseMap,
    collapse,
    multiplicity,
    collapse_census,
    multiplicity_bruteforce,
)

__all__ = [
    'Multiset',
    'MultisetPartition',
    'multiset_factorial',
    'SetPartition',
    'restricted_growth_strings',
    'enumerate_set_partitions',
    'stirling2',
    'bell',
    'enumerate_multiset_partitions',
    'enumerate_integer_partitions',
    'integer_partition_multiplicities',
    'CollapseMap',
    'collapse',
    'multiplicity',
    'collapse_census',
    'multiplicity_bruteforce',
]
