"""Parser for derivative signatures and multiset partitions.

Syntax:
    x1 x2^2                 - Signature d^3 / dx1 dx2^2
    x2 x1 x2                - Same signature; repeated factors add up
    [x1^2 x5][x1^2 x5][x7 x8] - Partition into bracketed blocks

Factors are separated by whitespace. Ids and exponents are positive
integers; the empty string is the empty signature.
"""
from collections import Counter
from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterator, Optional

from ..core import Multiset, MultisetPartition
from ..errors import InvalidPartitionError, SignatureSyntaxError


class TokenType(Enum):
    """Token types for signatures and partitions."""
    VARIABLE = auto()       # x<id>
    CARET = auto()          # ^
    NUMBER = auto()
    LBRACKET = auto()       # [
    RBRACKET = auto()       # ]
    EOF = auto()


@dataclass
class Token:
    """A single token with its 1-based column."""
    type: TokenType
    value: str
    column: int


class SignatureTokenizer:
    """Tokenizer for the signature grammar."""

    SYMBOLS = {
        "^": TokenType.CARET,
        "[": TokenType.LBRACKET,
        "]": TokenType.RBRACKET,
    }

    def __init__(self, content: str):
        self.content = content
        self.pos = 0

    @property
    def column(self) -> int:
        return self.pos + 1

    def _current(self) -> str:
        if self.pos >= len(self.content):
            return ""
        return self.content[self.pos]

    def _advance(self) -> str:
        char = self._current()
        self.pos += 1
        return char

    def _read_digits(self) -> str:
        chars = []
        while self._current() and self._current().isdigit():
            chars.append(self._advance())
        return "".join(chars)

    def tokenize(self) -> Iterator[Token]:
        while self.pos < len(self.content):
            char = self._current()

            if char.isspace():
                self._advance()
                continue

            if char in self.SYMBOLS:
                yield Token(self.SYMBOLS[char], char, self.column)
                self._advance()
                continue

            if char in ("x", "X"):
                start_col = self.column
                self._advance()
                digits = self._read_digits()
                if not digits:
                    raise SignatureSyntaxError("Expected a variable id after 'x'", self.column)
                yield Token(TokenType.VARIABLE, digits, start_col)
                continue

            if char.isdigit():
                start_col = self.column
                yield Token(TokenType.NUMBER, self._read_digits(), start_col)
                continue

            raise SignatureSyntaxError(f"Unexpected character '{char}'", self.column)

        yield Token(TokenType.EOF, "", self.column)


class SignatureParser:
    """Recursive-descent parser over SignatureTokenizer tokens."""

    def __init__(self, content: str):
        self.tokens = list(SignatureTokenizer(content).tokenize())
        self.pos = 0

    def _current(self) -> Token:
        return self.tokens[min(self.pos, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self._current()
        self.pos += 1
        return token

    def _expect(self, token_type: TokenType, what: str) -> Token:
        token = self._current()
        if token.type != token_type:
            found = "end of input" if token.type == TokenType.EOF else f"'{token.value}'"
            raise SignatureSyntaxError(f"Expected {what}, got {found}", token.column)
        return self._advance()

    def _factor(self) -> tuple[int, int]:
        token = self._expect(TokenType.VARIABLE, "a variable like x1")
        var = int(token.value)
        if var < 1:
            raise SignatureSyntaxError(f"Variable ids must be positive, got x{token.value}", token.column)

        exponent = 1
        if self._current().type == TokenType.CARET:
            self._advance()
            number = self._expect(TokenType.NUMBER, "an exponent")
            exponent = int(number.value)
            if exponent < 1:
                raise SignatureSyntaxError(f"Exponents must be at least 1, got {number.value}", number.column)
        return var, exponent

    def _factors_until(self, stop: TokenType) -> Counter:
        counts: Counter = Counter()
        while self._current().type not in (stop, TokenType.EOF):
            var, exponent = self._factor()
            counts[var] += exponent
        return counts

    def parse_signature(self) -> Multiset:
        counts = self._factors_until(TokenType.EOF)
        self._expect(TokenType.EOF, "end of input")
        return Multiset.from_counts(counts)

    def parse_partition(self) -> MultisetPartition:
        blocks = []
        while self._current().type != TokenType.EOF:
            opening = self._expect(TokenType.LBRACKET, "'['")
            counts = self._factors_until(TokenType.RBRACKET)
            self._expect(TokenType.RBRACKET, "']'")
            if not counts:
                raise SignatureSyntaxError("Empty block", opening.column)
            blocks.append(Multiset.from_counts(counts))
        return MultisetPartition.from_parts(blocks)


def parse_signature(text: str) -> Multiset:
    """Parse "x1 x2^2" into the multiset {1, 2, 2}.

    Raises:
        SignatureSyntaxError: With the 1-based column of the offending input
    """
    return SignatureParser(text).parse_signature()


def parse_partition(text: str, signature: Optional[Multiset] = None) -> MultisetPartition:
    """Parse "[x1^2 x5][x1^2 x5][x7 x8]" into a multiset partition.

    Args:
        text: Bracketed blocks of signature factors
        signature: If given, the partition must sum to it

    Raises:
        SignatureSyntaxError: If the text does not parse
        InvalidPartitionError: If the blocks do not sum to signature
    """
    mp = SignatureParser(text).parse_partition()
    if signature is not None and not mp.is_partition_of(signature):
        raise InvalidPartitionError(
            f"Partition {format_partition(mp)} sums to {format_signature(mp.total) or '{}'}, "
            f"not to {format_signature(signature) or '{}'}"
        )
    return mp


def format_signature(tau: Multiset) -> str:
    """Inverse of parse_signature: {1, 2, 2} -> "x1 x2^2"."""
    return " ".join(
        f"x{var}^{count}" if count > 1 else f"x{var}"
        for var, count in tau.entries
    )


def format_partition(mp: MultisetPartition) -> str:
    """Inverse of parse_partition, blocks in ascending order."""
    return "".join(f"[{format_signature(block)}]" for block in mp.ascending_blocks())


__all__ = [
    'TokenType',
    'Token',
    'SignatureTokenizer',
    'SignatureParser',
    'parse_signature',
    'parse_partition',
    'format_signature',
    'format_partition',
]
