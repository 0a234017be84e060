"""
生成二重セル分解と描画のテスト

⟨3⟩ 上の例 Pull_f Push_f X ⊢ Pull_h Push_g Y（セル 4 個）を使う。
"""

import os
import random
import sys
import xml.etree.ElementTree as ET

import pytest

# 相対インポートパスの設定
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from base.errors import BoundaryMismatch
from core.derivation import AtomAx
from core.formula import Pull, Push
from core.permeq import permeq_neighbors
from core.sampling import random_derivation
from instances.seeds import MICRO_SEEDS, zigzag_example
from zigzag.cells import (
    L_PULL, L_PUSH, R_PULL, R_PUSH, action, boundaries, dagger, decompose, empty_stack,
    make_stack, recompose, stack_to_zigzag, vcompose, zigzag_fibration,
)
from zigzag.render import render, render_text

SVG_NS = '{http://www.w3.org/2000/svg}'


def _split(stack, k):
    """上から k 個のセルとその残りに分ける"""
    upper = make_stack(stack.cells[:k], stack.top)
    return upper, make_stack(stack.cells[k:], upper.bottom)


class TestDecompose:
    """導出のセル分解"""

    def setup_method(self):
        self.fib, self.d = zigzag_example()
        self.delta, self.stack = decompose(self.fib, self.d)
        self.base = self.fib.base

    def test_cells_top_to_bottom(self):
        kinds = [c.kind for c in self.stack.cells]

        assert kinds == [R_PUSH, L_PUSH, L_PULL, R_PULL], f"セルの並びが期待値と異なります。実際値: {kinds}"
        assert len(self.stack) == 4

    def test_boundary_arrows(self):
        show = self.base.show
        rows = [show(self.stack.top)] + [show(c.bottom) for c in self.stack.cells]

        assert rows == ['f', 'h', 'g', 'h', 'id:A'], f"境界の射が期待値と異なります。実際値: {rows}"

    def test_cells_satisfy_boundary_equations(self):
        for cell in self.stack.cells:
            assert cell.check(self.base), f"{cell.symbol} の境界の等式が成り立ちません"

    def test_recompose_inverts(self):
        assert recompose(self.delta, self.stack) == self.d

    def test_recompose_random(self):
        rng = random.Random(17)
        for i in range(30):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            d = random_derivation(fib, rng, depth=6)
            delta, stack = decompose(fib, d)
            assert recompose(delta, stack) == d, f"sample {i}: 再合成が元に戻りません"
            assert stack.bottom == fib.project(d)


class TestStackAlgebra:
    """縦合成と上下反転"""

    def setup_method(self):
        self.fib, self.d = zigzag_example()
        _, self.stack = decompose(self.fib, self.d)

    def test_dagger_is_involution(self):
        flipped = dagger(self.stack)

        assert flipped.top == self.stack.bottom and flipped.bottom == self.stack.top
        assert dagger(flipped) == self.stack

    def test_dagger_reflects_single_cell(self):
        cell = self.stack.cells[1]
        single = make_stack([cell], cell.top)
        (flipped,) = dagger(single).cells

        assert cell.kind == L_PUSH
        assert flipped.kind == L_PULL, f"L⊳ の反転が期待値と異なります。期待値: L<, 実際値: {flipped.kind}"
        assert (flipped.side, flipped.top, flipped.bottom) == (cell.side, cell.bottom, cell.top), "反転で境界が入れ替わっていません"
        assert flipped.check(self.fib.base), "反転したセルの境界の等式が成り立ちません"

    def test_dagger_reverses_asymmetric_stack(self):
        head = make_stack(self.stack.cells[:2], self.stack.top)
        flipped = dagger(head)
        kinds = [c.kind for c in flipped.cells]

        assert kinds == [L_PULL, R_PULL], f"反転後のセルが期待値と異なります。期待値: ['L<', 'R<'], 実際値: {kinds}"
        assert flipped.top == head.bottom and flipped.bottom == head.top
        assert dagger(flipped) == head
        assert dagger(empty_stack(head.top)) == empty_stack(head.top)

    def test_dagger_reverses_vcompose(self):
        for k in range(len(self.stack) + 1):
            upper, lower = _split(self.stack, k)
            assert vcompose(upper, lower) == self.stack
            assert dagger(vcompose(upper, lower)) == vcompose(dagger(lower), dagger(upper)), f"{k} で分けた反転が一致しません"

    def test_vcompose_is_associative_on_random_stacks(self):
        rng = random.Random(31)
        checked = 0
        for i in range(30):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            _, stack = decompose(fib, random_derivation(fib, rng, depth=6))
            if len(stack) < 2:
                continue
            lo, hi = sorted(rng.sample(range(len(stack) + 1), 2))
            first, rest = _split(stack, lo)
            second, third = _split(rest, hi - lo)
            assert vcompose(vcompose(first, second), third) == vcompose(first, vcompose(second, third)) == stack
            assert dagger(dagger(stack)) == stack
            checked += 1

        assert checked > 0, "二つ以上のセルを持つスタックが生成されませんでした"

    def test_vcompose_with_empty(self):
        assert vcompose(self.stack, empty_stack(self.stack.bottom)) == self.stack
        assert vcompose(empty_stack(self.stack.top), self.stack) == self.stack

    def test_vcompose_mismatch(self):
        with pytest.raises(BoundaryMismatch):
            vcompose(self.stack, self.stack)

    def test_make_stack_checks_boundaries(self):
        with pytest.raises(BoundaryMismatch):
            make_stack(reversed(self.stack.cells), self.stack.top)
        assert make_stack(self.stack.cells, self.stack.top) == self.stack


class TestStackRelations:
    """置換同値の生成等式とセルの入れ替え"""

    def test_neighbors_swap_adjacent_cells(self):
        rng = random.Random(37)
        swapped = 0
        for i in range(30):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            d = random_derivation(fib, rng, depth=6)
            delta, stack = decompose(fib, d)
            for n in permeq_neighbors(fib, d):
                n_delta, n_stack = decompose(fib, n)
                diff = [k for k, (a, b) in enumerate(zip(stack.cells, n_stack.cells)) if a != b]

                assert n_delta == delta and len(n_stack) == len(stack), f"sample {i}: 公理かセル数が変わりました"
                assert (n_stack.top, n_stack.bottom) == (stack.top, stack.bottom), f"sample {i}: 外側の境界が変わりました"
                assert len(diff) == 2 and diff[1] == diff[0] + 1, f"sample {i}: 隣接する二つのセル以外が変わりました: {diff}"
                old, new = stack.cells[diff[0]:diff[0] + 2], n_stack.cells[diff[0]:diff[0] + 2]
                assert old[0].is_left != old[1].is_left, f"sample {i}: 左右の異なるセルの入れ替えではありません"
                assert [(c.kind, c.side) for c in new] == [(c.kind, c.side) for c in reversed(old)]
                swapped += 1

        assert swapped > 0, "隣接導出が一つも見つかりませんでした"

    def test_example_has_single_interchange(self):
        fib, d = zigzag_example()
        kinds = {tuple(c.kind for c in decompose(fib, n)[1].cells) for n in permeq_neighbors(fib, d)}

        # L⊲/R⊲ の対は B -> A のフィラーが要るので入れ替えられない
        assert kinds == {(L_PUSH, R_PUSH, L_PULL, R_PULL)}, f"隣接導出のセルが期待値と異なります。実際値: {kinds}"


class TestZigzagDoubleCategory:
    """恒等関手上の自由双ファイブレーションとしてのジグザグ"""

    def setup_method(self):
        self.fib, self.d = zigzag_example()
        _, self.stack = decompose(self.fib, self.d)
        self.zig = zigzag_fibration(self.fib.base)

    def test_boundaries(self):
        f, g, h = (self.fib.base.parse_arrow(name) for name in ('f', 'g', 'h'))
        left, right = boundaries(self.zig, self.stack)

        assert left == Pull(f, Push(f, self.zig.atom('A'))), f"左境界が期待値と異なります。実際値: {left}"
        assert right == Pull(h, Push(g, self.zig.atom('B'))), f"右境界が期待値と異なります。実際値: {right}"

    def test_action_replaces_axiom(self):
        z = stack_to_zigzag(self.zig, self.stack)
        alpha = self.fib.domain.parse_arrow('alpha')

        assert action(self.fib, AtomAx(alpha), z) == self.d

    def test_action_mismatch(self):
        z = stack_to_zigzag(self.zig, self.stack)
        ident = AtomAx(self.fib.domain.identity('X'))

        with pytest.raises(BoundaryMismatch):
            action(self.fib, ident, z)


class TestRender:
    """テキストと SVG の描画"""

    def setup_method(self):
        self.fib, self.d = zigzag_example()
        _, self.stack = decompose(self.fib, self.d)

    def test_text_ladder(self):
        text = render_text(self.fib.base, self.stack)
        lines = text.split('\n')

        assert len(lines) == 7, f"行数が期待値と異なります。期待値: 7, 実際値: {len(lines)}"
        assert 'LEFT' in lines[0] and 'RIGHT' in lines[0]
        assert 'f ⊳' in lines[4] and 'f ⊲' in lines[5], f"左列の側射が期待値と異なります:\n{text}"
        assert lines[3].rstrip().endswith('g ⊳') and lines[6].rstrip().endswith('h ⊲')

    def test_text_is_deterministic(self):
        assert render(self.fib.base, self.stack) == render(self.fib.base, self.stack, 'text')

    def test_svg_document(self):
        root = ET.fromstring(render(self.fib.base, self.stack, 'svg'))
        paths = list(root.iter(f'{SVG_NS}path'))
        texts = [t.text for t in root.iter(f'{SVG_NS}text')]

        assert root.tag == f'{SVG_NS}svg' and root.get('version') == '1.1'
        assert len(paths) == 4, f"配線の数が期待値と異なります。期待値: 4, 実際値: {len(paths)}"
        assert 'L⊳ f' in texts and 'R⊲ h' in texts, f"セルのラベルが見つかりません: {texts}"
