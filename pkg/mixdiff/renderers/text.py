"""Plain-text renderer.

    D[x1 x2^2] f(y) =
        f'(y) * D[x1 x2^2]y
      + f''(y) * D[x1]y * D[x2^2]y
      + 2 * f''(y) * D[x2]y * D[x1 x2]y
      + f'''(y) * D[x1]y * (D[x2]y)^2
"""
from ..core import Multiset
from ..expansion import CompositionExpansion, ProductExpansion
from ..parser import format_signature
from .base import BaseRenderer, grouped_blocks, register_renderer


def f_derivative(order: int, argument: str = "y") -> str:
    """f(y), f'(y), f''(y), f'''(y), then f^(m)(y)."""
    if order <= 3:
        primes = "'" * order
        return f"f{primes}({argument})"
    return f"f^({order})({argument})"


def derivative(part: Multiset, function: str) -> str:
    """D[x1 x2^2]y, or the bare function for the empty part."""
    if not part:
        return function
    return f"D[{format_signature(part)}]{function}"


def _join_terms(bodies: list[str]) -> list[str]:
    return [("    " if index == 0 else "  + ") + body for index, body in enumerate(bodies)]


@register_renderer
class TextRenderer(BaseRenderer):
    """Readable one-term-per-line output."""

    format_name = "text"
    aliases = ["txt", "plain"]

    def _factors(self, term, exponential: bool) -> list[str]:
        factors = []
        if term.coefficient != 1:
            factors.append(str(term.coefficient))
        if not exponential:
            factors.append(f_derivative(term.f_order))
        for part, times in grouped_blocks(term.shape):
            d = derivative(part, "y")
            factors.append(f"({d})^{times}" if times > 1 else d)
        return factors

    def render_composition(self, expansion: CompositionExpansion) -> str:
        outer = "exp(y)" if expansion.exponential else "f(y)"
        if expansion.signature:
            head = f"D[{format_signature(expansion.signature)}] {outer} ="
        else:
            head = f"{outer} ="

        bodies = [
            " * ".join(self._factors(term, expansion.exponential)) or "1"
            for term in expansion.terms
        ]
        if expansion.exponential:
            return "\n".join([f"{head} exp(y) * (", *_join_terms(bodies), ")"])
        return "\n".join([head, *_join_terms(bodies)])

    def render_product(self, expansion: ProductExpansion) -> str:
        if expansion.signature:
            head = f"D[{format_signature(expansion.signature)}] (u v) ="
        else:
            head = "u v ="

        bodies = []
        for term in expansion.terms:
            factors = [] if term.coefficient == 1 else [str(term.coefficient)]
            factors.append(derivative(term.u_part, "u"))
            factors.append(derivative(term.v_part, "v"))
            bodies.append(" * ".join(factors))
        return "\n".join([head, *_join_terms(bodies)])


__all__ = [
    'TextRenderer',
    'f_derivative',
    'derivative',
]
