"""
スタックの描画

text: 左辺の側射 | 基底の射 | 右辺の側射 の二列ラダー
svg:  ストリング図式（セルは折れた配線、領域は対象ごとに色分け）
"""

import zlib
import xml.etree.ElementTree as ET
from typing import Any, List

from base.category import CategoryBackend

from .cells import L_PULL, L_PUSH, R_PULL, R_PUSH, GenCell, Stack

ROW_HEIGHT = 60
WIDTH = 360
MARGIN = 40

_ARROW_MARK = {L_PUSH: '⊳', L_PULL: '⊲', R_PUSH: '⊳', R_PULL: '⊲'}


def object_color(obj: Any) -> str:
    """対象から決まる色（実行ごとに変わらないよう crc32 を使う）"""
    hue = zlib.crc32(repr(obj).encode('utf-8')) % 360
    return f"hsl({hue},55%,80%)"


def _side_label(category: CategoryBackend, cell: GenCell) -> str:
    return f"{category.show(cell.side)} {_ARROW_MARK[cell.kind]}"


def render_text(category: CategoryBackend, stack: Stack) -> str:
    """
    二列ラダー

    一行目が見出し、二行目が罫線、以降は上辺と各セルの下辺の射が一行ずつ並ぶ。
    セルの側射はその下辺の行の左列か右列に置く。
    """
    show = category.show
    rows: List[str] = []
    width = max([len(show(stack.top))] + [len(show(c.bottom)) for c in stack.cells] + [4])
    side = max([len(_side_label(category, c)) for c in stack.cells] + [5])
    rows.append(f"{'LEFT':>{side}} | {'BASE':^{width}} | RIGHT")
    rows.append(f"{'-' * side}-+-{'-' * width}-+-{'-' * side}")
    rows.append(f"{'':>{side}} | {show(stack.top):^{width}} |")
    for cell in stack.cells:
        label = _side_label(category, cell)
        left = label if cell.is_left else ''
        right = '' if cell.is_left else label
        rows.append(f"{left:>{side}} | {show(cell.bottom):^{width}} | {right}".rstrip())
    return "\n".join(rows)


def render_svg(category: CategoryBackend, stack: Stack) -> str:
    """
    ストリング図式の SVG 1.1 文書

    基底の射を水平の帯とし、左右の境界の対象で領域を塗る。
    各セルは側射の配線が中央から左右の縁へ折れる線として描かれる。
    """
    rows = len(stack.cells) + 1
    height = rows * ROW_HEIGHT + 2 * MARGIN
    svg = ET.Element('svg', {
        'xmlns': 'http://www.w3.org/2000/svg',
        'version': '1.1',
        'width': str(WIDTH + 2 * MARGIN),
        'height': str(height),
    })
    title = ET.SubElement(svg, 'title')
    title.text = f"stack of {len(stack.cells)} cells over {category.name}"

    arrows = [stack.top] + [c.bottom for c in stack.cells]
    for i, arrow in enumerate(arrows):
        y = MARGIN + i * ROW_HEIGHT
        ET.SubElement(svg, 'rect', {
            'x': str(MARGIN), 'y': str(y),
            'width': str(WIDTH // 2), 'height': str(ROW_HEIGHT),
            'fill': object_color(arrow.dom),
        })
        ET.SubElement(svg, 'rect', {
            'x': str(MARGIN + WIDTH // 2), 'y': str(y),
            'width': str(WIDTH // 2), 'height': str(ROW_HEIGHT),
            'fill': object_color(arrow.cod),
        })
        label = ET.SubElement(svg, 'text', {
            'x': str(MARGIN + WIDTH // 2), 'y': str(y + ROW_HEIGHT // 2),
            'text-anchor': 'middle', 'font-family': 'monospace', 'font-size': '12',
        })
        label.text = category.show(arrow)

    centre = MARGIN + WIDTH // 2
    for i, cell in enumerate(stack.cells):
        y_top = MARGIN + i * ROW_HEIGHT + ROW_HEIGHT // 2
        y_bottom = y_top + ROW_HEIGHT
        edge = MARGIN if cell.is_left else MARGIN + WIDTH
        # ⊳ は配線が下で縁へ、⊲ は上で縁から入る
        if cell.kind in (L_PUSH, R_PUSH):
            d = f"M {centre} {y_top} C {centre} {y_bottom}, {edge} {y_top}, {edge} {y_bottom}"
        else:
            d = f"M {edge} {y_top} C {edge} {y_bottom}, {centre} {y_top}, {centre} {y_bottom}"
        ET.SubElement(svg, 'path', {'d': d, 'stroke': 'black', 'fill': 'none', 'stroke-width': '2'})
        tag = ET.SubElement(svg, 'text', {
            'x': str(edge + (8 if cell.is_left else -8)), 'y': str(y_bottom - 6),
            'text-anchor': 'start' if cell.is_left else 'end',
            'font-family': 'monospace', 'font-size': '11',
        })
        tag.text = f"{cell.symbol} {category.show(cell.side)}"

    return ET.tostring(svg, encoding='unicode')


def render(category: CategoryBackend, stack: Stack, fmt: str = 'text') -> str:
    if fmt == 'svg':
        return render_svg(category, stack)
    return render_text(category, stack)
