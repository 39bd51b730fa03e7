"""LaTeX renderer using partial-derivative fractions."""
from ..core import Multiset
from ..expansion import CompositionExpansion, ProductExpansion
from .base import BaseRenderer, grouped_blocks, register_renderer


def _denominator(part: Multiset) -> str:
    return r"\,".join(
        rf"\partial x_{{{var}}}^{{{count}}}" if count > 1 else rf"\partial x_{{{var}}}"
        for var, count in part.entries
    )


def _partial(part: Multiset) -> str:
    return r"\partial" if part.size == 1 else rf"\partial^{{{part.size}}}"


def latex_operator(part: Multiset) -> str:
    r"""\frac{\partial^{3}}{\partial x_{1}\,\partial x_{2}^{2}}"""
    return rf"\frac{{{_partial(part)}}}{{{_denominator(part)}}}"


def latex_derivative(part: Multiset, function: str) -> str:
    r"""\frac{\partial^{3} y}{\partial x_{1}\,\partial x_{2}^{2}}; the bare function for the empty part."""
    if not part:
        return function
    return rf"\frac{{{_partial(part)} {function}}}{{{_denominator(part)}}}"


def latex_f_derivative(order: int) -> str:
    if order <= 3:
        primes = "'" * order
        return f"f{primes}(y)"
    return rf"f^{{({order})}}(y)"


def _join_terms(bodies: list[str]) -> list[str]:
    return [("  " if index == 0 else "  + ") + body for index, body in enumerate(bodies)]


@register_renderer
class LatexRenderer(BaseRenderer):
    """One term per line, ready to drop into an align environment."""

    format_name = "latex"
    aliases = ["tex"]

    def render_composition(self, expansion: CompositionExpansion) -> str:
        outer = "e^{y}" if expansion.exponential else "f(y)"
        if expansion.signature:
            head = f"{latex_operator(expansion.signature)} {outer} ="
        else:
            head = f"{outer} ="

        bodies = []
        for term in expansion.terms:
            factors = [] if term.coefficient == 1 else [str(term.coefficient)]
            if not expansion.exponential:
                factors.append(latex_f_derivative(term.f_order))
            for part, times in grouped_blocks(term.shape):
                d = latex_derivative(part, "y")
                factors.append(rf"\left({d}\right)^{{{times}}}" if times > 1 else d)
            bodies.append(" ".join(factors) or "1")

        if expansion.exponential:
            return "\n".join([rf"{head} e^{{y}} \left(", *_join_terms(bodies), r"\right)"])
        return "\n".join([head, *_join_terms(bodies)])

    def render_product(self, expansion: ProductExpansion) -> str:
        if expansion.signature:
            head = f"{latex_operator(expansion.signature)} (uv) ="
        else:
            head = "uv ="

        bodies = []
        for term in expansion.terms:
            factors = [] if term.coefficient == 1 else [str(term.coefficient)]
            factors.append(latex_derivative(term.u_part, "u"))
            factors.append(latex_derivative(term.v_part, "v"))
            bodies.append(" ".join(factors))
        return "\n".join([head, *_join_terms(bodies)])


__all__ = [
    'LatexRenderer',
    'latex_operator',
    'latex_derivative',
    'latex_f_derivative',
]
