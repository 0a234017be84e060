# 二重セルのスタック表現と描画
from .cells import (
    GenCell, Stack, action, boundaries, dagger, decompose, empty_stack,
    make_stack, recompose, stack_to_zigzag, vcompose, zigzag_fibration,
)
from .render import render, render_svg, render_text

__all__ = [
    'GenCell', 'Stack', 'action', 'boundaries', 'dagger', 'decompose', 'empty_stack',
    'make_stack', 'recompose', 'stack_to_zigzag', 'vcompose', 'zigzag_fibration',
    'render', 'render_svg', 'render_text',
]
