"""Renderers for expansions: plain text, LaTeX and JSON."""
from .base import BaseRenderer, register_renderer, get_renderer, list_formats
from .text import TextRenderer
from .latex import LatexRenderer
from .json import (
    JsonRenderer,
    composition_to_dict,
    product_to_dict,
    composition_from_json,
    product_from_json,
    expansion_from_json,
)

__all__ = [
    'BaseRenderer',
    'register_renderer',
    'get_renderer',
    'list_formats',
    'TextRenderer',
    'LatexRenderer',
    'JsonRenderer',
    'composition_to_dict',
    'product_to_dict',
    'composition_from_json',
    'product_from_json',
    'expansion_from_json',
]
