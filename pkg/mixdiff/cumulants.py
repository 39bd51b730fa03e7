"""Conversion between joint moments and joint cumulants.

A raw moment E(prod X_i) is the sum, over the partitions of its index
multiset, of the product of the cumulants of the parts. Repeated indices
collapse set partitions onto multiset partitions, so each multiset partition
is weighted by its collapsing multiplicity.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .config import resolve_limit
from .core import CollapseMap, Multiset, enumerate_multiset_partitions, multiplicity
from .errors import GuardExceededError, IncompleteAssignmentError, InvalidSignatureError


def _as_fraction(value: object, key: str) -> Fraction:
    if isinstance(value, bool):
        raise InvalidSignatureError(f"Value for key '{key}' must be a rational, got {value!r}")
    try:
        return Fraction(value.strip() if isinstance(value, str) else value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InvalidSignatureError(f"Value for key '{key}' must be a rational, got {value!r}") from None


def _as_multiset(key: Union[str, Multiset]) -> Multiset:
    return key if isinstance(key, Multiset) else Multiset.from_key(key)


def _coerce_values(values: Mapping) -> dict[Multiset, Fraction]:
    coerced = {}
    for key, value in values.items():
        part = _as_multiset(key)
        coerced[part] = _as_fraction(value, part.key())
    return coerced


@dataclass
class CumulantAssignment:
    """Joint cumulants keyed by non-empty multisets of random-variable ids."""
    joint: dict[Multiset, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.joint = _coerce_values(self.joint)
        if Multiset() in self.joint:
            raise InvalidSignatureError("Cumulants are defined for non-empty multisets only")

    @classmethod
    def univariate(cls, values: Sequence, var: int = 1) -> 'CumulantAssignment':
        """kappa_1, kappa_2, ... of a single variable x_var."""
        return cls({Multiset.repeated(var, n): value for n, value in enumerate(values, start=1)})

    def get(self, part: Multiset) -> Fraction:
        try:
            return self.joint[part]
        except KeyError:
            raise IncompleteAssignmentError('cumulant', part.key()) from None


@dataclass
class MomentAssignment:
    """Raw joint moments keyed by multisets of random-variable ids.

    The moment of the empty multiset is always 1.
    """
    raw: dict[Multiset, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.raw = _coerce_values(self.raw)
        empty = self.raw.pop(Multiset(), None)
        if empty is not None and empty != 1:
            raise InvalidSignatureError(f"The moment of the empty multiset is 1, got {empty}")

    @classmethod
    def univariate(cls, values: Sequence, var: int = 1) -> 'MomentAssignment':
        """E(X), E(X^2), ... of a single variable x_var."""
        return cls({Multiset.repeated(var, n): value for n, value in enumerate(values, start=1)})

    def get(self, part: Multiset) -> Fraction:
        if not part:
            return Fraction(1)
        try:
            return self.raw[part]
        except KeyError:
            raise IncompleteAssignmentError('moment', part.key()) from None


def moment_from_cumulants(
    target: Multiset,
    kappa: CumulantAssignment,
    max_size: Optional[int] = None,
) -> Fraction:
    """E(prod over target) as a multiplicity-weighted sum over partitions.

    Args:
        target: Index multiset of the moment
        kappa: Cumulants of every sub-multiset of target
        max_size: Override for the max_multiset_size guard

    Raises:
        IncompleteAssignmentError: If a needed cumulant is missing
        GuardExceededError: If |target| is larger than the guard
    """
    if not target:
        return Fraction(1)
    total = Fraction(0)
    for mp in enumerate_multiset_partitions(target, max_size=max_size):
        total += multiplicity(target, mp) * prod(
            (kappa.get(part) ** times for part, times in mp.parts),
            start=Fraction(1),
        )
    return total


class _CumulantSolver:
    """Memoized triangular inversion for one moment assignment."""

    def __init__(self, mu: MomentAssignment, max_size: Optional[int]):
        self.mu = mu
        self.max_size = max_size
        self.memo: dict[Multiset, Fraction] = {}

    def solve(self, target: Multiset) -> Fraction:
        if target in self.memo:
            return self.memo[target]
        value = self.mu.get(target)
        for mp in enumerate_multiset_partitions(target, max_size=self.max_size):
            if mp.num_parts == 1:
                continue
            value -= multiplicity(target, mp) * prod(
                (self.solve(part) ** times for part, times in mp.parts),
                start=Fraction(1),
            )
        self.memo[target] = value
        return value


def cumulants_from_moments(
    target: Multiset,
    mu: MomentAssignment,
    max_size: Optional[int] = None,
) -> Fraction:
    """kappa(target) from the raw moments of target and its sub-multisets.

    Raises:
        InvalidSignatureError: If target is empty
        IncompleteAssignmentError: If a needed moment is missing
    """
    if not target:
        raise InvalidSignatureError("Cumulants are defined for non-empty multisets only")
    return _CumulantSolver(mu, max_size).solve(target)


def moment_table(
    target: Multiset,
    kappa: CumulantAssignment,
    max_size: Optional[int] = None,
) -> dict[Multiset, Fraction]:
    """Moments of every non-empty sub-multiset of target, ordered by size."""
    parts = sorted((part for part in target.submultisets() if part), key=Multiset.sort_key)
    return {part: moment_from_cumulants(part, kappa, max_size=max_size) for part in parts}


def cumulant_table(
    target: Multiset,
    mu: MomentAssignment,
    max_size: Optional[int] = None,
) -> dict[Multiset, Fraction]:
    """Cumulants of every non-empty sub-multiset of target, ordered by size."""
    solver = _CumulantSolver(mu, max_size)
    parts = sorted((part for part in target.submultisets() if part), key=Multiset.sort_key)
    return {part: solver.solve(part) for part in parts}


def scale_cumulants(kappa: CumulantAssignment, c: object) -> CumulantAssignment:
    """Multiply every kappa(S) by c^|S|, the effect of scaling each variable by c."""
    c = Fraction(c)
    return CumulantAssignment({part: value * c ** part.size for part, value in kappa.joint.items()})


@dataclass
class CumulantCheck:
    """Both sides of E(X^n) computed over n distinct ids and over one id."""
    n: int
    distinct: Fraction
    collapsed: Fraction

    @property
    def ok(self) -> bool:
        return self.distinct == self.collapsed

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'distinct': str(self.distinct),
            'collapsed': str(self.collapsed),
            'ok': self.ok,
        }


def collapse_cumulant_identity_check(
    n: int,
    kappa: CumulantAssignment,
    var: int = 1,
    max_size: Optional[int] = None,
) -> CumulantCheck:
    """Check that identifying n distinct variables reproduces E(X^n).

    The joint cumulants over ids 1..n are pulled back from kappa through the
    map sending every id to var, so kappa(X_1..X_j) reads kappa_j(X).
    """
    if n < 1:
        raise InvalidSignatureError(f"n must be a positive integer, got {n}")
    limit = resolve_limit(max_size, 'max_set_size')
    if n > limit:
        raise GuardExceededError("Cumulant collapse check", n, limit)

    distinct = Multiset(tuple((j, 1) for j in range(1, n + 1)))
    cmap = CollapseMap((var,) * n)
    pulled = CumulantAssignment({
        part: kappa.get(part.image(cmap))
        for part in distinct.submultisets()
        if part
    })
    return CumulantCheck(
        n,
        moment_from_cumulants(distinct, pulled, max_size=limit),
        moment_from_cumulants(Multiset.repeated(var, n), kappa, max_size=limit),
    )


def load_assignment(
    path: Union[str, Path],
    default_kind: str = 'cumulants',
) -> Union[CumulantAssignment, MomentAssignment]:
    """Read a cumulant or moment assignment from a JSON file.

    The document is either {"kind": "cumulants" | "moments", "values": {...}}
    or a bare {key: value} mapping read as default_kind. Keys are multiset keys
    such as "1:2,2:1"; values are integers or rational strings like "3/4".

    Raises:
        FileNotFoundError: If the file doesn't exist
        InvalidSignatureError: If the document is malformed
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise InvalidSignatureError(f"Invalid JSON in {path}: {e.msg} (line {e.lineno})") from None

    if not isinstance(data, dict):
        raise InvalidSignatureError(f"{path} must hold a JSON object")
    if 'values' in data:
        kind = data.get('kind', default_kind)
        values = data['values']
    else:
        kind, values = default_kind, data
    if not isinstance(values, dict):
        raise InvalidSignatureError(f"'values' in {path} must be a JSON object")

    if kind == 'cumulants':
        return CumulantAssignment(values)
    if kind == 'moments':
        return MomentAssignment(values)
    raise InvalidSignatureError(f"Unknown assignment kind '{kind}'. Available: cumulants, moments")


__all__ = [
    'CumulantAssignment',
    'MomentAssignment',
    'moment_from_cumulants',
    'cumulants_from_moments',
    'moment_table',
    'cumulant_table',
    'scale_cumulants',
    'CumulantCheck',
    'collapse_cumulant_identity_check',
    'load_assignment',
]
