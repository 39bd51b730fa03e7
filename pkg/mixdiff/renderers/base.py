"""Base renderer class and factory functions."""
from abc import ABC, abstractmethod
from typing import Union

from ..core import Multiset, MultisetPartition
from ..expansion import CompositionExpansion, ProductExpansion

Expansion = Union[CompositionExpansion, ProductExpansion]


class BaseRenderer(ABC):
    """Abstract base class for all renderers.

    Renderers turn a collected expansion into a deterministic document
    (plain text, LaTeX, JSON). Output carries no trailing newline.
    """

    # Class attributes that subclasses should override
    format_name: str = ""
    aliases: list[str] = []

    @abstractmethod
    def render_composition(self, expansion: CompositionExpansion) -> str:
        """Render d_tau f(y), or d_tau exp(y) when expansion.exponential is set."""
        pass

    @abstractmethod
    def render_product(self, expansion: ProductExpansion) -> str:
        """Render d_tau (uv)."""
        pass

    def render(self, expansion: Expansion) -> str:
        """Render either kind of expansion.

        Raises:
            TypeError: If expansion is neither a composition nor a product
        """
        if isinstance(expansion, CompositionExpansion):
            return self.render_composition(expansion)
        if isinstance(expansion, ProductExpansion):
            return self.render_product(expansion)
        raise TypeError(f"Cannot render {type(expansion).__name__}")


def grouped_blocks(shape: MultisetPartition) -> list[tuple[Multiset, int]]:
    """Distinct parts with their multiplicities, in display order."""
    return sorted(shape.parts, key=lambda item: item[0].sort_key())


# Registry of renderers
_RENDERERS: dict[str, type[BaseRenderer]] = {}


def register_renderer(renderer_class: type[BaseRenderer]) -> type[BaseRenderer]:
    """Register a renderer class.

    Args:
        renderer_class: The renderer class to register

    Returns:
        The renderer class (for use as decorator)
    """
    for name in [renderer_class.format_name, *renderer_class.aliases]:
        _RENDERERS[name] = renderer_class
    return renderer_class


def get_renderer(format_name: str) -> type[BaseRenderer]:
    """Get the renderer for a format name.

    Args:
        format_name: Format name (e.g., "text", "latex", "json")

    Returns:
        Renderer class

    Raises:
        ValueError: If no renderer is registered for the format
    """
    name = format_name.lower().strip()
    if name in _RENDERERS:
        return _RENDERERS[name]

    available = ", ".join(list_formats())
    raise ValueError(f"No renderer for format '{name}'. Available: {available}")


def list_formats() -> list[str]:
    """Get the primary names of the registered formats."""
    return sorted({cls.format_name for cls in _RENDERERS.values()})


__all__ = [
    'Expansion',
    'BaseRenderer',
    'grouped_blocks',
    'register_renderer',
    'get_renderer',
    'list_formats',
]
