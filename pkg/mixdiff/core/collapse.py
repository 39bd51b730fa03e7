"""Collapse maps and the multiplicities of collapsing partitions.

When some of the variables x1..xn become indistinguishable, the set {1..n}
collapses to a multiset tau and every set partition collapses to a partition
of tau. The multiplicity of a multiset partition is how many set partitions
land on it. It has the closed form

    k_1! ... k_n! / (tau_1!!^m_1 tau_2!!^m_2 ... m_1! m_2! ...)

where k_i are the multiplicities in tau, tau_i the distinct parts, m_i how
often each part occurs, and sigma!! the product of the factorials of the
multiplicities of sigma.
"""
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Mapping

from ..errors import InvalidPartitionError
from .multiset import Multiset, MultisetPartition, multiset_factorial
from .partitions import SetPartition, enumerate_set_partitions


@dataclass(frozen=True)
class CollapseMap:
    """A total map from {1..n} to variable ids.

    targets[j - 1] is the id that original variable j collapses to.
    """
    targets: tuple[int, ...]

    def __post_init__(self):
        targets = tuple(self.targets)
        object.__setattr__(self, 'targets', targets)
        for target in targets:
            if not isinstance(target, int) or isinstance(target, bool) or target < 1:
                raise InvalidPartitionError(f"Collapse targets must be positive integers, got {target!r}")

    @classmethod
    def identity(cls, n: int) -> 'CollapseMap':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> 'CollapseMap':
        """Build from {original: target}; the keys must be exactly 1..n."""
        n = len(mapping)
        if sorted(mapping) != list(range(1, n + 1)):
            raise InvalidPartitionError(f"Collapse map must be defined on 1..{n}, got keys {sorted(mapping)}")
        return cls(tuple(mapping[j] for j in range(1, n + 1)))

    @classmethod
    def for_multiset(cls, tau: Multiset) -> 'CollapseMap':
        """The map sending the first k_1 elements to the first id, and so on.

        For tau = {1,1,1,1,5,5,7,8} this is 1,2,3,4 -> 1; 5,6 -> 5; 7 -> 7; 8 -> 8.
        """
        return cls(tuple(tau.elements()))

    @property
    def n(self) -> int:
        return len(self.targets)

    def __call__(self, j: int) -> int:
        if not 1 <= j <= len(self.targets):
            raise InvalidPartitionError(f"Collapse map is not defined on {j} (domain is 1..{self.n})")
        return self.targets[j - 1]

    def target(self) -> Multiset:
        """The multiset the ground set {1..n} collapses to."""
        return Multiset.from_counts(Counter(self.targets))


def collapse(pi: SetPartition, cmap: CollapseMap) -> MultisetPartition:
    """Map every block of pi through cmap and collect equal images.

    Raises:
        InvalidPartitionError: If cmap is not defined on all of {1..n}
    """
    if cmap.n != pi.n:
        raise InvalidPartitionError(
            f"Collapse map is defined on 1..{cmap.n} but the partition is of 1..{pi.n}"
        )
    targets = cmap.targets
    images = Counter()
    for block in pi.blocks:
        images[Multiset.from_counts(Counter(targets[j - 1] for j in block))] += 1
    return MultisetPartition(tuple(images.items()))


def multiplicity(tau: Multiset, mp: MultisetPartition) -> int:
    """Number of set partitions of {1..|tau|} that collapse to mp.

    Computed from the closed form; no enumeration, no size cap.

    Raises:
        InvalidPartitionError: If mp is not a partition of tau
    """
    if mp.total != tau:
        raise InvalidPartitionError(f"{mp} is not a partition of {tau}")
    numerator = multiset_factorial(tau)
    denominator = 1
    for part, times in mp.parts:
        denominator *= multiset_factorial(part) ** times * factorial(times)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(
            f"Multiplicity of {mp} in {tau} is not an integer ({numerator}/{denominator})"
        )
    return quotient


def collapse_census(tau: Multiset, max_size: int | None = None) -> Counter:
    """Count, for every partition of tau, the set partitions collapsing to it.

    One pass over all B_|tau| set partitions.

    Raises:
        GuardExceededError: If |tau| is larger than the max_set_size guard
    """
    cmap = CollapseMap.for_multiset(tau)
    census: Counter = Counter()
    for pi in enumerate_set_partitions(tau.size, max_size=max_size):
        census[collapse(pi, cmap)] += 1
    return census


def multiplicity_bruteforce(
    tau: Multiset,
    mp: MultisetPartition,
    max_size: int | None = None,
) -> int:
    """Count set partitions collapsing to mp by direct enumeration.

    Raises:
        InvalidPartitionError: If mp is not a partition of tau
        GuardExceededError: If |tau| is larger than the max_set_size guard
    """
    if mp.total != tau:
        raise InvalidPartitionError(f"{mp} is not a partition of {tau}")
    cmap = CollapseMap.for_multiset(tau)
    return sum(
        1 for pi in enumerate_set_partitions(tau.size, max_size=max_size)
        if collapse(pi, cmap) == mp
    )


__all__ = [
    'CollapseMap',
    'collapse',
    'multiplicity',
    'collapse_census',
    'multiplicity_bruteforce',
]
