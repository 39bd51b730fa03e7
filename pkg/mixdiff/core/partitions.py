"""Set, multiset and integer partitions.

Set partitions of {1..n} are generated as restricted growth strings: a[i] is
the block index of element i+1, with a[0] = 0 and a[i] <= 1 + max(a[:i]).
Walking these strings in lexicographic order is the incremental construction
"put n+1 in a new block, or into one of the existing blocks" iterated, and it
streams without keeping earlier partitions around.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from ..config import resolve_limit
from ..errors import GuardExceededError, InvalidPartitionError
from .multiset import Multiset, MultisetPartition


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..n} into non-empty disjoint blocks.

    Blocks are stored ascending and ordered by their minimum element.
    """
    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        blocks = tuple(tuple(sorted(block)) for block in self.blocks)
        blocks = tuple(sorted(blocks, key=lambda block: block[0] if block else 0))
        object.__setattr__(self, 'blocks', blocks)

        seen: list[int] = []
        for block in blocks:
            if not block:
                raise InvalidPartitionError("Blocks must be non-empty")
            seen.extend(block)
        if sorted(seen) != list(range(1, self.n + 1)):
            raise InvalidPartitionError(
                f"Blocks {blocks} do not partition {{1..{self.n}}}"
            )

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> 'SetPartition':
        """Build from blocks in any order; n is inferred."""
        blocks = tuple(tuple(block) for block in blocks)
        return cls(blocks, sum(len(block) for block in blocks))

    @classmethod
    def from_rgs(cls, rgs: tuple[int, ...]) -> 'SetPartition':
        """Build from a restricted growth string."""
        grouped: list[list[int]] = []
        for element, index in enumerate(rgs, start=1):
            if index == len(grouped):
                grouped.append([])
            elif index > len(grouped):
                raise InvalidPartitionError(f"{rgs} is not a restricted growth string")
            grouped[index].append(element)
        return cls(tuple(tuple(block) for block in grouped), len(rgs))

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        if not self.blocks:
            return "{}"
        return "+".join("{" + ",".join(map(str, block)) + "}" for block in self.blocks)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every restricted growth string of length n in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        yield ()
        return

    a = [0] * n
    # ceiling[i] = max(a[:i]) for i >= 1
    ceiling = [0] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] == ceiling[i] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(ceiling[i], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            ceiling[j] = top


def enumerate_set_partitions(n: int, max_size: int | None = None) -> Iterator[SetPartition]:
    """Yield every partition of {1..n} exactly once, in canonical form.

    Args:
        n: Ground set size (0 gives the single empty partition)
        max_size: Override for the max_set_size guard

    Raises:
        GuardExceededError: If n is larger than the guard
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    limit = resolve_limit(max_size, 'max_set_size')
    if n > limit:
        raise GuardExceededError("Set-partition enumeration", n, limit)
    return (SetPartition.from_rgs(rgs) for rgs in restricted_growth_strings(n))


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    # S(n, k) for k = 0..n. Element n either opens a new block (S(n-1, k-1))
    # or joins one of k existing blocks (k * S(n-1, k)).
    if n == 0:
        return (1,)
    previous = _stirling_row(n - 1) + (0,)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = previous[k - 1] + k * previous[k]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k blocks."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return 0
    for m in range(n):  # build rows bottom-up so deep n never recurses far
        _stirling_row(m)
    return _stirling_row(n)[k]


def bell(n: int) -> int:
    """Number of partitions of an n-element set.

    >>> [bell(n) for n in range(9)]
    [1, 1, 2, 5, 15, 52, 203, 877, 4140]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return sum(stirling2(n, k) for k in range(n + 1))


def _vector_partitions(
    remaining: tuple[int, ...],
    upper: tuple[int, ...] | None,
) -> Iterator[list[tuple[int, ...]]]:
    # Parts come out in non-increasing lexicographic order. The first part
    # always takes some of the leading non-zero component, otherwise a later
    # part would have to be larger than it.
    if not any(remaining):
        yield []
        return
    lead = next(i for i, count in enumerate(remaining) if count)
    ranges = [
        range(count, -1, -1) if i != lead else range(count, 0, -1)
        for i, count in enumerate(remaining)
    ]
    for part in product(*ranges):
        if upper is not None and part > upper:
            continue
        rest = tuple(r - p for r, p in zip(remaining, part))
        for tail in _vector_partitions(rest, part):
            yield [part] + tail


def enumerate_multiset_partitions(
    tau: Multiset,
    max_size: int | None = None,
) -> Iterator[MultisetPartition]:
    """Yield every partition of the multiset tau exactly once.

    For a set this matches set partitions; for a single repeated member it
    matches integer partitions of the size.

    Raises:
        GuardExceededError: If |tau| is larger than the max_multiset_size guard
    """
    limit = resolve_limit(max_size, 'max_multiset_size')
    if tau.size > limit:
        raise GuardExceededError("Multiset-partition enumeration", tau.size, limit)
    return _multiset_partitions(tau)


def _multiset_partitions(tau: Multiset) -> Iterator[MultisetPartition]:
    support = tau.support
    vector = tuple(count for _, count in tau.entries)
    for parts in _vector_partitions(vector, None):
        yield MultisetPartition.from_parts(
            Multiset(tuple((var, c) for var, c in zip(support, part) if c))
            for part in parts
        )


def enumerate_integer_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of n as non-increasing tuples, largest first."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")

    def parts(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    return parts(n, n)


def integer_partition_multiplicities(parts: Iterable[int]) -> tuple[int, ...]:
    """Convert parts like (3, 3, 2) to the vector (m_1, ..., m_k), k = sum.

    >>> integer_partition_multiplicities((3, 3, 2))
    (0, 1, 2, 0, 0, 0, 0, 0)
    """
    parts = tuple(parts)
    if any(p < 1 for p in parts):
        raise InvalidPartitionError(f"Integer partition parts must be positive, got {parts}")
    k = sum(parts)
    m = [0] * k
    for p in parts:
        m[p - 1] += 1
    return tuple(m)


__all__ = [
    'SetPartition',
    'restricted_growth_strings',
    'enumerate_set_partitions',
    'stirling2',
    'bell',
    'enumerate_multiset_partitions',
    'enumerate_integer_partitions',
    'integer_partition_multiplicities',
]
