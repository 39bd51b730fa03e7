"""Parser for the signature and partition text grammar."""
from .signature import (
    SignatureParser,
    SignatureTokenizer,
    parse_signature,
    parse_partition,
    format_signature,
    format_partition,
)

__all__ = [
    'SignatureParser',
    'SignatureTokenizer',
    'parse_signature',
    'parse_partition',
    'format_signature',
    'format_partition',
]
