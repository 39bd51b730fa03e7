"""Multisets and partitions of multisets.

A multiset maps variable ids (positive integers) to positive multiplicities,
e.g. {1, 2, 2} is stored as ((1, 1), (2, 2)). It doubles as a derivative
signature: {1, 2, 2} stands for the operator d^3 / dx1 dx2^2.

A multiset partition writes a multiset as a sum of non-empty multisets. Equal
parts are stored once together with how many times they occur, so that
2*{1,1,5} + {7,8} has two distinct parts with multiplicities 2 and 1.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Mapping

from ..errors import InvalidSignatureError, InvalidPartitionError


@dataclass(frozen=True)
class Multiset:
    """A multiset of variable ids, stored as sorted (id, multiplicity) pairs."""
    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        entries = tuple(tuple(pair) for pair in self.entries)
        object.__setattr__(self, 'entries', entries)

        previous = 0
        for pair in entries:
            if len(pair) != 2:
                raise InvalidSignatureError(f"Multiset entry must be (id, multiplicity), got {pair!r}")
            var, count = pair
            if not isinstance(var, int) or isinstance(var, bool) or var < 1:
                raise InvalidSignatureError(f"Variable ids must be positive integers, got {var!r}")
            if not isinstance(count, int) or isinstance(count, bool) or count < 1:
                raise InvalidSignatureError(f"Multiplicity of x{var} must be a positive integer, got {count!r}")
            if var <= previous:
                raise InvalidSignatureError("Multiset entries must be sorted by strictly increasing id")
            previous = var

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> 'Multiset':
        """Build from an id -> multiplicity mapping. Zero counts are dropped."""
        entries = []
        for var, count in counts.items():
            if isinstance(count, int) and not isinstance(count, bool) and count < 0:
                raise InvalidSignatureError(f"Multiplicity of x{var} must not be negative, got {count}")
            if count != 0:
                entries.append((var, count))
        try:
            entries.sort()
        except TypeError:
            raise InvalidSignatureError(f"Variable ids must be positive integers, got {list(counts)!r}") from None
        return cls(tuple(entries))

    @classmethod
    def of(cls, *elements: int) -> 'Multiset':
        """Build from listed members, e.g. Multiset.of(1, 2, 2)."""
        return cls.from_counts(Counter(elements))

    @classmethod
    def repeated(cls, var: int, count: int) -> 'Multiset':
        """The multiset holding count copies of var."""
        return cls.from_counts({var: count})

    @classmethod
    def from_key(cls, key: str) -> 'Multiset':
        """Parse the serialization key produced by key(), e.g. "1:1,2:2"."""
        key = key.strip()
        if not key:
            return cls()
        counts: dict[int, int] = {}
        for item in key.split(','):
            var_text, sep, count_text = item.partition(':')
            try:
                var = int(var_text)
                count = int(count_text) if sep else 1
            except ValueError:
                raise InvalidSignatureError(f"Malformed multiset key '{key}'") from None
            if var in counts:
                raise InvalidSignatureError(f"Duplicate id {var} in multiset key '{key}'")
            counts[var] = count
        if any(count < 1 for count in counts.values()):
            raise InvalidSignatureError(f"Multiplicities must be positive in key '{key}'")
        return cls.from_counts(counts)

    @property
    def size(self) -> int:
        """Sum of multiplicities."""
        return sum(count for _, count in self.entries)

    @property
    def support(self) -> tuple[int, ...]:
        """The distinct ids, ascending."""
        return tuple(var for var, _ in self.entries)

    def count(self, var: int) -> int:
        for v, c in self.entries:
            if v == var:
                return c
        return 0

    def counts(self) -> dict[int, int]:
        return dict(self.entries)

    def elements(self) -> Iterator[int]:
        """Iterate members with repetition, ascending."""
        for var, count in self.entries:
            for _ in range(count):
                yield var

    def key(self) -> str:
        """Serialization key: sorted "id:multiplicity" items joined by commas."""
        return ",".join(f"{var}:{count}" for var, count in self.entries)

    def sort_key(self) -> tuple:
        """Ascending size, then lexicographic entries."""
        return (self.size, self.entries)

    def issubset(self, other: 'Multiset') -> bool:
        """True if every multiplicity is at most the one in other."""
        return all(count <= other.count(var) for var, count in self.entries)

    def __add__(self, other: 'Multiset') -> 'Multiset':
        if not isinstance(other, Multiset):
            return NotImplemented
        counts = Counter(self.counts())
        counts.update(other.counts())
        return Multiset.from_counts(counts)

    def __sub__(self, other: 'Multiset') -> 'Multiset':
        if not isinstance(other, Multiset):
            return NotImplemented
        if not other.issubset(self):
            raise InvalidSignatureError(f"{other} is not contained in {self}")
        counts = self.counts()
        for var, count in other.entries:
            counts[var] -= count
        return Multiset.from_counts(counts)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def add(self, var: int, count: int = 1) -> 'Multiset':
        """Return a copy with count more copies of var."""
        return self + Multiset.repeated(var, count)

    def image(self, cmap) -> 'Multiset':
        """Apply a collapse map to every member, summing merged multiplicities."""
        counts: Counter = Counter()
        for var, count in self.entries:
            counts[cmap(var)] += count
        return Multiset.from_counts(counts)

    def submultisets(self) -> Iterator['Multiset']:
        """All sub-multisets, the empty one and self included."""
        ranges = [range(count + 1) for _, count in self.entries]
        for choice in product(*ranges):
            yield Multiset(tuple(
                (var, c) for (var, _), c in zip(self.entries, choice) if c
            ))

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self.elements()) + "}"

    def __repr__(self) -> str:
        return f"Multiset({self.counts()!r})"


def multiset_factorial(sigma: Multiset) -> int:
    """Product of the factorials of the multiplicities (sigma!!).

    >>> multiset_factorial(Multiset.of(1, 1, 1, 1, 2, 2, 2))
    144
    """
    return prod(factorial(count) for _, count in sigma.entries)


def _part_order(part: Multiset) -> tuple:
    # Canonical storage order: larger parts first, then lexicographic entries
    return (-part.size, part.entries)


@dataclass(frozen=True)
class MultisetPartition:
    """A multiset written as a sum of non-empty parts.

    parts holds (part, times) pairs. Construction merges repeated parts and
    sorts them by descending size, then lexicographically, so two partitions
    are equal exactly when they are the same sum.
    """
    parts: tuple[tuple[Multiset, int], ...] = ()

    def __post_init__(self):
        merged: Counter = Counter()
        for pair in self.parts:
            try:
                part, times = pair
            except (TypeError, ValueError):
                raise InvalidPartitionError(f"Partition entry must be (Multiset, times), got {pair!r}") from None
            if not isinstance(part, Multiset):
                raise InvalidPartitionError(f"Partition parts must be Multisets, got {part!r}")
            if not part:
                raise InvalidPartitionError("Partition parts must be non-empty")
            if not isinstance(times, int) or isinstance(times, bool) or times < 1:
                raise InvalidPartitionError(f"Part multiplicity must be a positive integer, got {times!r}")
            merged[part] += times
        ordered = tuple(sorted(merged.items(), key=lambda item: _part_order(item[0])))
        object.__setattr__(self, 'parts', ordered)

    @classmethod
    def from_parts(cls, parts: Iterable[Multiset]) -> 'MultisetPartition':
        """Build from parts listed with repetition."""
        return cls(tuple((part, 1) for part in parts))

    @property
    def total(self) -> Multiset:
        """The multiset this is a partition of."""
        counts: Counter = Counter()
        for part, times in self.parts:
            for var, count in part.entries:
                counts[var] += count * times
        return Multiset.from_counts(counts)

    @property
    def num_parts(self) -> int:
        """Number of parts counted with multiplicity."""
        return sum(times for _, times in self.parts)

    def blocks(self) -> tuple[Multiset, ...]:
        """Parts with repetition, in canonical (descending) order."""
        return tuple(part for part, times in self.parts for _ in range(times))

    def ascending_blocks(self) -> tuple[Multiset, ...]:
        """Parts with repetition, ascending size then lexicographic.

        This is the order used for display and for ordering terms.
        """
        return tuple(sorted(self.blocks(), key=Multiset.sort_key))

    def order_key(self) -> tuple:
        """Sort key placing {1}+{2,2} before {2}+{1,2}, as printed in the literature."""
        return tuple(block.sort_key() for block in self.ascending_blocks())

    def times(self, part: Multiset) -> int:
        for p, t in self.parts:
            if p == part:
                return t
        return 0

    def is_partition_of(self, tau: Multiset) -> bool:
        return self.total == tau

    def add_part(self, part: Multiset) -> 'MultisetPartition':
        """Return a copy with one more part."""
        return MultisetPartition(self.parts + ((part, 1),))

    def replace_part(self, old: Multiset, new: Multiset) -> 'MultisetPartition':
        """Return a copy with one occurrence of old replaced by new."""
        remaining = []
        found = False
        for part, times in self.parts:
            if part == old and not found:
                found = True
                if times > 1:
                    remaining.append((part, times - 1))
            else:
                remaining.append((part, times))
        if not found:
            raise InvalidPartitionError(f"{old} is not a part of {self}")
        remaining.append((new, 1))
        return MultisetPartition(tuple(remaining))

    def image(self, cmap) -> 'MultisetPartition':
        """Apply a collapse map to every part."""
        return MultisetPartition(tuple((part.image(cmap), times) for part, times in self.parts))

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return "+".join(str(block) for block in self.ascending_blocks())


__all__ = [
    'Multiset',
    'MultisetPartition',
    'multiset_factorial',
]
