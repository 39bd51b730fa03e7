"""Mixed partial derivatives of a composition f(y).

For a signature tau, d_tau f(y) is a sum over the partitions of tau. A
partition with p parts contributes f^(p)(y) times the product of d_part y over
its parts, weighted by the number of set partitions that collapse to it.
When all variables are distinct every weight is 1; when they are all the same
variable the weights are the classical Faa di Bruno coefficients.

Two independent ways to build the expansion are provided: expand_composition
goes straight to the closed-form weights, and differentiate_expansion applies
the chain and product rules one variable at a time.
"""
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from ..core import (
    CollapseMap,
    Multiset,
    MultisetPartition,
    enumerate_integer_partitions,
    enumerate_multiset_partitions,
    integer_partition_multiplicities,
    multiplicity,
)
from ..errors import InvalidSignatureError


@dataclass(frozen=True)
class CompositionTerm:
    """coefficient * f^(f_order)(y) * prod(d_part y for part in shape)."""
    f_order: int
    shape: MultisetPartition
    coefficient: int

    def __post_init__(self):
        if self.f_order != self.shape.num_parts:
            raise InvalidSignatureError(
                f"f_order {self.f_order} does not match the {self.shape.num_parts} parts of {self.shape}"
            )
        if self.coefficient < 1:
            raise InvalidSignatureError(f"Coefficients must be positive, got {self.coefficient}")

    def sort_key(self) -> tuple:
        return (self.f_order, self.shape.order_key())


@dataclass(frozen=True)
class CompositionExpansion:
    """The collected expansion of d_signature f(y).

    exponential marks f = exp: every f^(m)(y) is the common factor e^y.
    """
    signature: Multiset
    terms: tuple[CompositionTerm, ...]
    exponential: bool = False

    @classmethod
    def collect(
        cls,
        signature: Multiset,
        coefficients: dict[MultisetPartition, int],
        exponential: bool = False,
    ) -> 'CompositionExpansion':
        """Build from shape -> coefficient, in rendering order."""
        terms = [
            CompositionTerm(shape.num_parts, shape, coefficient)
            for shape, coefficient in coefficients.items()
            if coefficient
        ]
        terms.sort(key=CompositionTerm.sort_key)
        return cls(signature, tuple(terms), exponential)

    def coefficients(self) -> dict[MultisetPartition, int]:
        return {term.shape: term.coefficient for term in self.terms}

    def coefficient_sum(self) -> int:
        return sum(term.coefficient for term in self.terms)

    def terms_by_order(self) -> dict[int, int]:
        """How many distinct terms carry each derivative order of f."""
        return dict(sorted(Counter(term.f_order for term in self.terms).items()))

    def __len__(self) -> int:
        return len(self.terms)


def identity_expansion(exponential: bool = False) -> CompositionExpansion:
    """The zero-order expansion f(y) itself."""
    return CompositionExpansion(
        Multiset(),
        (CompositionTerm(0, MultisetPartition(), 1),),
        exponential,
    )


def expand_composition(tau: Multiset, max_size: int | None = None) -> CompositionExpansion:
    """Expand d_tau f(y) with one term per partition of tau.

    Args:
        tau: Derivative signature
        max_size: Override for the max_multiset_size guard

    Returns:
        The collected expansion; the empty signature gives f(y)

    Raises:
        GuardExceededError: If |tau| is larger than the guard
    """
    if not tau:
        return identity_expansion()
    coefficients = {
        mp: multiplicity(tau, mp)
        for mp in enumerate_multiset_partitions(tau, max_size=max_size)
    }
    return CompositionExpansion.collect(tau, coefficients)


def expand_exponential(tau: Multiset, max_size: int | None = None) -> CompositionExpansion:
    """Expand d_tau exp(y): the same terms, each f^(m)(y) read as e^y."""
    expansion = expand_composition(tau, max_size=max_size)
    return CompositionExpansion(expansion.signature, expansion.terms, exponential=True)


def differentiate_expansion(e: CompositionExpansion, var: int) -> CompositionExpansion:
    """Differentiate every term of e with respect to x_var and collect.

    A term f^(p)(y) * prod(d_B y) becomes
    f^(p+1)(y) * d_var y * prod(d_B y)  (new singleton part), plus
    f^(p)(y) * d_{B+var} y * prod(d_C y, C != B) for each part B.
    """
    added = Multiset.repeated(var, 1)
    coefficients: Counter = Counter()
    for term in e.terms:
        coefficients[term.shape.add_part(added)] += term.coefficient
        for part, times in term.shape.parts:
            grown = term.shape.replace_part(part, part + added)
            coefficients[grown] += term.coefficient * times
    return CompositionExpansion.collect(e.signature + added, coefficients, e.exponential)


def expand_by_differentiation(order: Sequence[int], exponential: bool = False) -> CompositionExpansion:
    """Build an expansion by differentiating f(y) along order, one variable at a time."""
    expansion = identity_expansion(exponential)
    for var in order:
        expansion = differentiate_expansion(expansion, var)
    return expansion


def collapse_expansion(e: CompositionExpansion, cmap: CollapseMap) -> CompositionExpansion:
    """Make variables indistinguishable in every term and collect like terms."""
    coefficients: Counter = Counter()
    for term in e.terms:
        coefficients[term.shape.image(cmap)] += term.coefficient
    return CompositionExpansion.collect(e.signature.image(cmap), coefficients, e.exponential)


def faa_di_bruno_coefficient(m: Sequence[int]) -> int:
    """k! / (1!^m_1 ... k!^m_k m_1! ... m_k!) for k = len(m).

    Args:
        m: m_j counts the parts of size j; must satisfy sum(j * m_j) == k

    >>> faa_di_bruno_coefficient((0, 1, 2, 0, 0, 0, 0, 0))
    280

    Raises:
        InvalidSignatureError: If an entry is negative or the constraint fails
    """
    m = tuple(m)
    k = len(m)
    if any(not isinstance(mj, int) or mj < 0 for mj in m):
        raise InvalidSignatureError(f"Part counts must be non-negative integers, got {m}")
    weight = sum(j * mj for j, mj in enumerate(m, start=1))
    if weight != k:
        raise InvalidSignatureError(f"Part counts {m} describe a partition of {weight}, not of {k}")
    denominator = 1
    for j, mj in enumerate(m, start=1):
        denominator *= factorial(j) ** mj * factorial(mj)
    return factorial(k) // denominator


def faa_di_bruno_terms(k: int) -> dict[tuple[int, ...], int]:
    """Coefficient of every term of d^k/dx^k f(y), keyed by integer partition."""
    return {
        parts: faa_di_bruno_coefficient(integer_partition_multiplicities(parts))
        for parts in enumerate_integer_partitions(k)
    }


__all__ = [
    'CompositionTerm',
    'CompositionExpansion',
    'identity_expansion',
    'expand_composition',
    'expand_exponential',
    'differentiate_expansion',
    'expand_by_differentiation',
    'collapse_expansion',
    'faa_di_bruno_coefficient',
    'faa_di_bruno_terms',
]
