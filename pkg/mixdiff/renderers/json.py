"""JSON renderer and reader.

Composition document:
    {"kind": "composition" | "exponential",
     "signature": {"1": 1, "2": 2},
     "terms": [{"f_order": 2, "coefficient": "2",
                "parts": [{"vars": {"2": 1}, "times": 1}, ...]}, ...]}

Product document:
    {"kind": "product", "signature": {...},
     "terms": [{"coefficient": "2", "u": {"2": 1}, "v": {"1": 1, "2": 1}}, ...]}

Coefficients are decimal strings so that big integers survive any consumer.
"""
import json
from collections import Counter
from typing import Union

from ..core import Multiset, MultisetPartition
from ..errors import InvalidPartitionError, InvalidSignatureError
from ..expansion import CompositionExpansion, ProductExpansion
from .base import BaseRenderer, grouped_blocks, register_renderer


def multiset_to_dict(sigma: Multiset) -> dict[str, int]:
    return {str(var): count for var, count in sigma.entries}


def multiset_from_dict(data: object) -> Multiset:
    if not isinstance(data, dict):
        raise InvalidSignatureError(f"Expected an id -> multiplicity object, got {data!r}")
    try:
        counts = {int(var): count for var, count in data.items()}
    except ValueError:
        raise InvalidSignatureError(f"Variable ids must be integers, got {list(data)!r}") from None
    return Multiset.from_counts(counts)


def composition_to_dict(expansion: CompositionExpansion) -> dict:
    return {
        'kind': 'exponential' if expansion.exponential else 'composition',
        'signature': multiset_to_dict(expansion.signature),
        'terms': [
            {
                'f_order': term.f_order,
                'coefficient': str(term.coefficient),
                'parts': [
                    {'vars': multiset_to_dict(part), 'times': times}
                    for part, times in grouped_blocks(term.shape)
                ],
            }
            for term in expansion.terms
        ],
    }


def product_to_dict(expansion: ProductExpansion) -> dict:
    return {
        'kind': 'product',
        'signature': multiset_to_dict(expansion.signature),
        'terms': [
            {
                'coefficient': str(term.coefficient),
                'u': multiset_to_dict(term.u_part),
                'v': multiset_to_dict(term.v_part),
            }
            for term in expansion.terms
        ],
    }


def _load(document: Union[str, dict]) -> dict:
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise InvalidSignatureError(f"Invalid JSON: {e.msg} (line {e.lineno})") from None
    if not isinstance(document, dict):
        raise InvalidSignatureError("Expansion document must be a JSON object")
    return document


def _coefficient(term: dict) -> int:
    raw = term.get('coefficient')
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise InvalidSignatureError(f"Coefficient must be an integer string, got {raw!r}") from None


def composition_from_json(document: Union[str, dict]) -> CompositionExpansion:
    """Rebuild a CompositionExpansion from its JSON form.

    Raises:
        InvalidSignatureError: If the document is malformed
        InvalidPartitionError: If a term's parts do not sum to the signature
    """
    data = _load(document)
    kind = data.get('kind', 'composition')
    if kind not in ('composition', 'exponential'):
        raise InvalidSignatureError(f"Expected a composition document, got kind '{kind}'")

    signature = multiset_from_dict(data.get('signature', {}))
    coefficients: Counter = Counter()
    for term in data.get('terms', []):
        try:
            parts = tuple(
                (multiset_from_dict(part['vars']), part['times'])
                for part in term['parts']
            )
        except (KeyError, TypeError):
            raise InvalidSignatureError(f"Malformed term {term!r}") from None
        shape = MultisetPartition(parts)
        if not shape.is_partition_of(signature):
            raise InvalidPartitionError(f"Term {shape} is not a partition of {signature}")
        if term.get('f_order', shape.num_parts) != shape.num_parts:
            raise InvalidSignatureError(f"f_order of {shape} must be {shape.num_parts}")
        coefficients[shape] += _coefficient(term)
    return CompositionExpansion.collect(signature, coefficients, exponential=kind == 'exponential')


def product_from_json(document: Union[str, dict]) -> ProductExpansion:
    """Rebuild a ProductExpansion from its JSON form.

    Raises:
        InvalidSignatureError: If the document is malformed
        InvalidPartitionError: If u and v do not add up to the signature
    """
    data = _load(document)
    if data.get('kind', 'product') != 'product':
        raise InvalidSignatureError(f"Expected a product document, got kind '{data.get('kind')}'")

    signature = multiset_from_dict(data.get('signature', {}))
    coefficients: Counter = Counter()
    for term in data.get('terms', []):
        try:
            u_part = multiset_from_dict(term['u'])
            v_part = multiset_from_dict(term['v'])
        except (KeyError, TypeError):
            raise InvalidSignatureError(f"Malformed term {term!r}") from None
        if u_part + v_part != signature:
            raise InvalidPartitionError(f"{u_part} + {v_part} is not {signature}")
        coefficients[u_part] += _coefficient(term)
    return ProductExpansion.collect(signature, coefficients)


def expansion_from_json(document: Union[str, dict]) -> Union[CompositionExpansion, ProductExpansion]:
    """Dispatch on the document's kind."""
    data = _load(document)
    if data.get('kind') == 'product':
        return product_from_json(data)
    return composition_from_json(data)


@register_renderer
class JsonRenderer(BaseRenderer):
    """Lossless machine-readable output."""

    format_name = "json"

    def render_composition(self, expansion: CompositionExpansion) -> str:
        return json.dumps(composition_to_dict(expansion), indent=2)

    def render_product(self, expansion: ProductExpansion) -> str:
        return json.dumps(product_to_dict(expansion), indent=2)


__all__ = [
    'JsonRenderer',
    'multiset_to_dict',
    'multiset_from_dict',
    'composition_to_dict',
    'product_to_dict',
    'composition_from_json',
    'product_from_json',
    'expansion_from_json',
]
