"""
生成二重セルとスタック

セルは上から下（公理側から根側）へ並べる。各セルは
上辺・下辺の基底の射と、側辺の射を持つ。

    L⊳ (LDiv)   side f, top f·g,  bottom g
    L⊲ (LMult)  side g, top g',   bottom g·g'
    R⊳ (RMult)  side h, top f',   bottom f'·h
    R⊲ (RDiv)   side g, top f·g,  bottom f
"""

import logging
from dataclasses import dataclass
from typing import Any, Tuple

from base.category import Arrow, CategoryBackend
from base.errors import BoundaryMismatch, NonComposable
from base.functor import identity_functor

from core.derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from core.fibration import FreeBifibration
from core.formula import Formula

logger = logging.getLogger(__name__)

L_PUSH = 'L>'
L_PULL = 'L<'
R_PUSH = 'R>'
R_PULL = 'R<'

_DAGGER = {L_PUSH: L_PULL, L_PULL: L_PUSH, R_PUSH: R_PULL, R_PULL: R_PUSH}
_SYMBOL = {L_PUSH: 'L⊳', L_PULL: 'L⊲', R_PUSH: 'R⊳', R_PULL: 'R⊲'}


@dataclass(frozen=True)
class GenCell:
    kind: str
    side: Arrow
    top: Arrow
    bottom: Arrow

    @property
    def is_left(self) -> bool:
        return self.kind in (L_PUSH, L_PULL)

    @property
    def symbol(self) -> str:
        return _SYMBOL[self.kind]

    def check(self, category: CategoryBackend) -> bool:
        """境界の等式が基底で成り立つか"""
        c = category.compose
        try:
            if self.kind == L_PUSH:
                return c(self.side, self.bottom) == self.top
            if self.kind == L_PULL:
                return c(self.side, self.top) == self.bottom
            if self.kind == R_PUSH:
                return c(self.top, self.side) == self.bottom
            return c(self.bottom, self.side) == self.top
        except NonComposable:
            return False


@dataclass(frozen=True)
class Stack:
    cells: Tuple[GenCell, ...]
    top: Arrow

    @property
    def bottom(self) -> Arrow:
        return self.cells[-1].bottom if self.cells else self.top

    def __len__(self):
        return len(self.cells)


def make_stack(cells, top: Arrow) -> Stack:
    """隣接セルの境界を確認してスタックを作る"""
    cells = tuple(cells)
    current = top
    for i, cell in enumerate(cells):
        if cell.top != current:
            raise BoundaryMismatch(
                f"{i} 番目のセルの上辺が直前の下辺と一致しません",
                f"上辺 {cell.top!r} と直前の下辺 {current!r} が異なります",
                "セルの並び順と境界の射を確認してください",
            )
        current = cell.bottom
    return Stack(cells, top)


def decompose(fib: FreeBifibration, d: Derivation) -> Tuple[Arrow, Stack]:
    """導出を (δ, 生成セルの列) に一意に分解する"""
    path = []
    node = d
    while not isinstance(node, AtomAx):
        path.append(node)
        node = node.body
    delta = node.delta
    cells = []
    for item in reversed(path):
        top = fib.project(item.body)
        bottom = fib.project(item)
        if isinstance(item, LDiv):
            cells.append(GenCell(L_PUSH, item.f, top, bottom))
        elif isinstance(item, LMult):
            cells.append(GenCell(L_PULL, item.g, top, bottom))
        elif isinstance(item, RMult):
            cells.append(GenCell(R_PUSH, item.f, top, bottom))
        else:
            cells.append(GenCell(R_PULL, item.g, top, bottom))
    return delta, Stack(tuple(cells), fib.functor.on_arrow(delta))


def recompose(delta: Any, stack: Stack) -> Derivation:
    """decompose の逆。公理 ⟨δ⟩ にセルを上から順に適用する"""
    d: Derivation = AtomAx(delta)
    for cell in stack.cells:
        if cell.kind == L_PUSH:
            d = LDiv(cell.side, cell.bottom, d)
        elif cell.kind == R_PUSH:
            d = RMult(d, cell.side)
        elif cell.kind == L_PULL:
            d = LMult(cell.side, d)
        else:
            d = RDiv(d, cell.bottom, cell.side)
    return d


def vcompose(s1: Stack, s2: Stack) -> Stack:
    """s1 の下に s2 を積む"""
    if s1.bottom != s2.top:
        raise BoundaryMismatch(
            "スタックを縦に合成できません",
            f"上のスタックの下辺 {s1.bottom!r} と下のスタックの上辺 {s2.top!r} が異なります",
            "境界の一致するスタックを渡してください",
        )
    return Stack(s1.cells + s2.cells, s1.top)


def empty_stack(arrow: Arrow) -> Stack:
    return Stack((), arrow)


def dagger_cell(cell: GenCell) -> GenCell:
    return GenCell(_DAGGER[cell.kind], cell.side, cell.bottom, cell.top)


def dagger(stack: Stack) -> Stack:
    """上下反転。セル列を逆順にし各セルの ⊳/⊲ を入れ替える"""
    return Stack(tuple(dagger_cell(c) for c in reversed(stack.cells)), stack.bottom)


def zigzag_fibration(category: CategoryBackend) -> FreeBifibration:
    """恒等関手 Id_C 上の自由双ファイブレーション（ジグザグ二重圏）"""
    return FreeBifibration(identity_functor(category), name=f"zigzag({category.name})")


def stack_to_zigzag(zig: FreeBifibration, stack: Stack) -> Derivation:
    """スタックを Z(C) の導出として読む（原子は C の対象）"""
    d = recompose(stack.top, stack)
    zig.judgment(d)
    return d


def boundaries(zig: FreeBifibration, stack: Stack) -> Tuple[Formula, Formula]:
    """左右の境界ジグザグ"""
    judgment = zig.judgment(stack_to_zigzag(zig, stack))
    return judgment.lhs, judgment.rhs


def action(fib: FreeBifibration, a: Derivation, z: Derivation) -> Derivation:
    """
    α ⊛ ζ：ジグザグ導出 ζ の唯一の公理を α で置き換える

    Raises:
        BoundaryMismatch: α の基底が ζ の上辺と一致しない場合
    """
    path = []
    node = z
    while not isinstance(node, AtomAx):
        path.append(node)
        node = node.body
    if fib.project(a) != node.delta:
        raise BoundaryMismatch(
            "作用の境界が一致しません",
            f"導出の基底 {fib.project(a)!r} とジグザグの上辺 {node.delta!r} が異なります",
            "ジグザグ導出の公理に合う導出を渡してください",
        )
    result = a
    for item in reversed(path):
        if isinstance(item, LDiv):
            result = LDiv(item.f, item.g, result)
        elif isinstance(item, RMult):
            result = RMult(result, item.f)
        elif isinstance(item, LMult):
            result = LMult(item.g, result)
        else:
            result = RDiv(result, item.f, item.g)
    fib.judgment(result)
    return result
