"""Mixed partial derivatives of a product uv.

Every member of the signature lands either on u or on v. With distinct
variables that gives one coefficient-1 term per subset; when variables are
identified the terms collect into products of binomial coefficients.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import comb, prod

from ..core import CollapseMap, Multiset
from ..errors import InvalidSignatureError


@dataclass(frozen=True)
class ProductTerm:
    """coefficient * d_{u_part} u * d_{v_part} v."""
    u_part: Multiset
    v_part: Multiset
    coefficient: int

    def __post_init__(self):
        if self.coefficient < 1:
            raise InvalidSignatureError(f"Coefficients must be positive, got {self.coefficient}")

    def sort_key(self) -> tuple:
        return self.u_part.sort_key()

    def swapped(self) -> 'ProductTerm':
        return ProductTerm(self.v_part, self.u_part, self.coefficient)


@dataclass(frozen=True)
class ProductExpansion:
    """The collected expansion of d_signature (uv)."""
    signature: Multiset
    terms: tuple[ProductTerm, ...]

    @classmethod
    def collect(cls, signature: Multiset, coefficients: dict[Multiset, int]) -> 'ProductExpansion':
        """Build from u_part -> coefficient, ordered by the derivative taken of u."""
        terms = [
            ProductTerm(u_part, signature - u_part, coefficient)
            for u_part, coefficient in coefficients.items()
            if coefficient
        ]
        terms.sort(key=ProductTerm.sort_key)
        return cls(signature, tuple(terms))

    def coefficients(self) -> dict[Multiset, int]:
        return {term.u_part: term.coefficient for term in self.terms}

    def coefficient_sum(self) -> int:
        return sum(term.coefficient for term in self.terms)

    def swapped(self) -> 'ProductExpansion':
        """Exchange the roles of u and v in every term."""
        return ProductExpansion.collect(
            self.signature,
            {term.v_part: term.coefficient for term in self.terms},
        )

    def __len__(self) -> int:
        return len(self.terms)


def expand_product(tau: Multiset) -> ProductExpansion:
    """Expand d_tau (uv): one term per sub-multiset l of tau, weight prod C(k_i, l_i)."""
    support = tau.support
    counts = [count for _, count in tau.entries]
    coefficients = {}
    for split in product(*(range(k + 1) for k in counts)):
        u_part = Multiset(tuple((var, l) for var, l in zip(support, split) if l))
        coefficients[u_part] = prod(comb(k, l) for k, l in zip(counts, split))
    return ProductExpansion.collect(tau, coefficients)


def differentiate_product(e: ProductExpansion, var: int) -> ProductExpansion:
    """Apply d/dx_var to every term: it lands on u or on v."""
    added = Multiset.repeated(var, 1)
    coefficients: Counter = Counter()
    for term in e.terms:
        coefficients[term.u_part + added] += term.coefficient
        coefficients[term.u_part] += term.coefficient
    return ProductExpansion.collect(e.signature + added, coefficients)


def expand_product_by_differentiation(order) -> ProductExpansion:
    """Build a product expansion one variable at a time, starting from uv."""
    expansion = ProductExpansion(Multiset(), (ProductTerm(Multiset(), Multiset(), 1),))
    for var in order:
        expansion = differentiate_product(expansion, var)
    return expansion


def collapse_product(e: ProductExpansion, cmap: CollapseMap) -> ProductExpansion:
    """Make variables indistinguishable in every term and collect like terms."""
    coefficients: Counter = Counter()
    for term in e.terms:
        coefficients[term.u_part.image(cmap)] += term.coefficient
    return ProductExpansion.collect(e.signature.image(cmap), coefficients)


def leibniz_coefficients(k: int) -> tuple[int, ...]:
    """Coefficients of d^k/dx^k (uv), ordered by the derivative taken of u."""
    if k < 0:
        raise InvalidSignatureError(f"Order must be non-negative, got {k}")
    return tuple(comb(k, l) for l in range(k + 1))


__all__ = [
    'ProductTerm',
    'ProductExpansion',
    'expand_product',
    'differentiate_product',
    'expand_product_by_differentiation',
    'collapse_product',
    'leibniz_coefficients',
]
