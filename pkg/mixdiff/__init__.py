"""mixdiff - mixed partial derivatives under identification of variables.

Symbolic expansions of d_tau f(y) and d_tau (uv) for a multiset tau of
variables, where every coefficient is the number of set partitions that
collapse onto a multiset partition. Includes exact polynomial oracles and
the moment/cumulant partition calculus.
"""

__version__ = "0.1.0"

# Re-export commonly used classes and functions
from .core import (
    Multiset,
    MultisetPartition,
    SetPartition,
    CollapseMap,
    bell,
    stirling2,
    multiplicity,
    enumerate_set_partitions,
    enumerate_multiset_partitions,
)
from .expansion import (
    CompositionExpansion,
    ProductExpansion,
    expand_composition,
    expand_exponential,
    expand_product,
    faa_di_bruno_coefficient,
)
from .cumulants import (
    CumulantAssignment,
    MomentAssignment,
    moment_from_cumulants,
    cumulants_from_moments,
)
from .parser import parse_signature, parse_partition

__all__ = [
    '__version__',
    'Multiset',
    'MultisetPartition',
    'SetPartition',
    'CollapseMap',
    'bell',
    'stirling2',
    'multiplicity',
    'enumerate_set_partitions',
    'enumerate_multiset_partitions',
    'CompositionExpansion',
    'ProductExpansion',
    'expand_composition',
    'expand_exponential',
    'expand_product',
    'faa_di_bruno_coefficient',
    'CumulantAssignment',
    'MomentAssignment',
    'moment_from_cumulants',
    'cumulants_from_moments',
    'parse_signature',
    'parse_partition',
]
