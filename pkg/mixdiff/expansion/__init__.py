"""Symbolic expansions of derivatives of compositions and products."""
from .composition import (
    CompositionTerm,
    CompositionExpansion,
    identity_expansion,
    expand_composition,
    expand_exponential,
    differentiate_expansion,
    expand_by_differentiation,
    collapse_expansion,
    faa_di_bruno_coefficient,
    faa_di_bruno_terms,
)
from .product import (
    ProductTerm,
    ProductExpansion,
    expand_product,
    differentiate_product,
    expand_product_by_differentiation,
    collapse_product,
    leibniz_coefficients,
)

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
    'ProductTerm',
    'ProductExpansion',
    'expand_product',
    'differentiate_product',
    'expand_product_by_differentiation',
    'collapse_product',
    'leibniz_coefficients',
]
