"""
劈開された解釈先と導出の解釈

CleavedTarget は atom の像・push/pull の対象操作・opcart/cart・
左右の除算・合成を持つ。interpret は導出の五つの規則を
この操作で順に解釈する。

- SimplexTarget: p₂ 上。ファイバー 0 は Δ、1 は Δ⊥（⊥ を 0 番目に持つ）
- TreeTarget: p_ω 上。ファイバー k は印付き平面木
- DisplacementTarget: B(ℕ) 上の (ℤ, ≤)
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional

from base.category import Arrow, CategoryBackend
from base.errors import TargetDivisionFailed

from core.derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from core.fibration import FreeBifibration
from core.formula import Atom, Formula, Push

from .trees import (
    MarkedTree, arrow_length, compose_maps, counit_maps, grow, grow_maps, identity_maps, lower,
    one_vertex, transpose_maps,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TargetArrow:
    """解釈先の射。base は載っている基底の射"""
    src: Any
    tgt: Any
    base: Arrow
    data: Any = None


class CleavedTarget:
    """
    解釈先の抽象クラス

    除算は定義されないとき None を返す。interpret はそれを
    TargetDivisionFailed として報告する。
    """

    name = 'abstract'

    def __init__(self, category: CategoryBackend):
        self.category = category

    def atom(self, obj: Any) -> Any:
        raise NotImplementedError

    def push(self, f: Arrow, X: Any) -> Any:
        raise NotImplementedError

    def pull(self, g: Arrow, Y: Any) -> Any:
        raise NotImplementedError

    def axiom(self, delta: Arrow, base: Arrow, X: Any, Y: Any) -> TargetArrow:
        raise NotImplementedError

    def opcart(self, f: Arrow, X: Any) -> TargetArrow:
        raise NotImplementedError

    def cart(self, g: Arrow, Y: Any) -> TargetArrow:
        raise NotImplementedError

    def compose(self, a: TargetArrow, b: TargetArrow) -> TargetArrow:
        raise NotImplementedError

    def ldiv(self, f: Arrow, g: Arrow, alpha: TargetArrow) -> Optional[TargetArrow]:
        """α : X ⊢_{fg} Y から push(f,X) ⊢_g Y"""
        raise NotImplementedError

    def rdiv(self, alpha: TargetArrow, f: Arrow, g: Arrow) -> Optional[TargetArrow]:
        """α : X ⊢_{fg} Y から X ⊢_f pull(g,Y)"""
        raise NotImplementedError

    def division_laws_hold(self, f: Arrow, g: Arrow, alpha: TargetArrow) -> bool:
        """opcart·ldiv(α) = α かつ rdiv(α)·cart = α"""
        left = self.ldiv(f, g, alpha)
        right = self.rdiv(alpha, f, g)
        if left is None or right is None:
            return False
        return (self.compose(self.opcart(f, alpha.src), left) == alpha
                and self.compose(right, self.cart(g, alpha.tgt)) == alpha)

    def __repr__(self):
        return f"{type(self).__name__}({self.category.name})"


def interpret_formula(target: CleavedTarget, S: Formula) -> Any:
    if isinstance(S, Atom):
        return target.atom(S.obj)
    body = interpret_formula(target, S.body)
    if isinstance(S, Push):
        return target.push(S.arrow, body)
    return target.pull(S.arrow, body)


def _divided(result: Optional[TargetArrow], d: Derivation, target: CleavedTarget) -> TargetArrow:
    if result is None:
        raise TargetDivisionFailed(
            f"{type(d).__name__} の除算が解釈先で定義されていません",
            f"{target!r} に条件を満たす射がありません",
            "双ファイブレーションになっている解釈先を使ってください",
        )
    return result


def interpret(fib: FreeBifibration, d: Derivation, target: CleavedTarget) -> TargetArrow:
    """
    導出を解釈先の射に写す

    Raises:
        TargetDivisionFailed: 除算が定義されない場合
    """
    if isinstance(d, AtomAx):
        judgment = fib.judgment(d)
        return target.axiom(d.delta, judgment.base, interpret_formula(target, judgment.lhs),
                            interpret_formula(target, judgment.rhs))
    body = interpret(fib, d.body, target)
    if isinstance(d, LDiv):
        return _divided(target.ldiv(d.f, d.g, body), d, target)
    if isinstance(d, RMult):
        return target.compose(body, target.opcart(d.f, body.tgt))
    if isinstance(d, LMult):
        return target.compose(target.cart(d.g, body.src), body)
    return _divided(target.rdiv(body, d.f, d.g), d, target)


class SimplexTarget(CleavedTarget):
    """
    ⟨2⟩ 上の Δ / Δ⊥

    対象は要素数、射は像のタプル。push_f は ⊥ を足す L、pull_f は R で要素数を変えない。
    """

    name = 'simplex'

    def atom(self, obj: Any) -> int:
        return 0

    def push(self, f: Arrow, X: int) -> int:
        return X + arrow_length(f)

    def pull(self, g: Arrow, Y: int) -> int:
        return Y

    def axiom(self, delta: Arrow, base: Arrow, X: int, Y: int) -> TargetArrow:
        return TargetArrow(X, Y, base, tuple(range(X)))

    def opcart(self, f: Arrow, X: int) -> TargetArrow:
        shift = arrow_length(f)
        return TargetArrow(X, X + shift, f, tuple(i + shift for i in range(X)))

    def cart(self, g: Arrow, Y: int) -> TargetArrow:
        return TargetArrow(Y, Y, g, tuple(range(Y)))

    def compose(self, a: TargetArrow, b: TargetArrow) -> TargetArrow:
        return TargetArrow(a.src, b.tgt, self.category.compose(a.base, b.base),
                           tuple(b.data[i] for i in a.data))

    def ldiv(self, f: Arrow, g: Arrow, alpha: TargetArrow) -> Optional[TargetArrow]:
        if arrow_length(f) == 0:
            return TargetArrow(alpha.src, alpha.tgt, g, alpha.data)
        if alpha.tgt == 0:
            return None
        # ⊥ を ⊥ へ
        return TargetArrow(alpha.src + 1, alpha.tgt, g, (0,) + alpha.data)

    def rdiv(self, alpha: TargetArrow, f: Arrow, g: Arrow) -> Optional[TargetArrow]:
        return TargetArrow(alpha.src, alpha.tgt, f, alpha.data)


class TreeTarget(CleavedTarget):
    """
    ω 上の印付き平面木

    X ⊢_u Y の射は L^u X -> Y の印を保つ自然変換として持つ。
    """

    name = 'tree'

    def atom(self, obj: Any) -> MarkedTree:
        return one_vertex()

    def push(self, f: Arrow, X: MarkedTree) -> MarkedTree:
        for _ in range(arrow_length(f)):
            X = grow(X)
        return X

    def pull(self, g: Arrow, Y: MarkedTree) -> MarkedTree:
        for _ in range(arrow_length(g)):
            Y = lower(Y)
        return Y

    def axiom(self, delta: Arrow, base: Arrow, X: MarkedTree, Y: MarkedTree) -> TargetArrow:
        return TargetArrow(X, Y, base, identity_maps(X))

    def opcart(self, f: Arrow, X: MarkedTree) -> TargetArrow:
        Y = self.push(f, X)
        return TargetArrow(X, Y, f, identity_maps(Y))

    def cart(self, g: Arrow, Y: MarkedTree) -> TargetArrow:
        return TargetArrow(self.pull(g, Y), Y, g, counit_maps(Y, arrow_length(g)))

    def compose(self, a: TargetArrow, b: TargetArrow) -> TargetArrow:
        lifted = a.data
        mark = a.tgt.mark
        for step in range(arrow_length(b.base)):
            lifted = grow_maps(lifted, mark + step)
        return TargetArrow(a.src, b.tgt, self.category.compose(a.base, b.base), compose_maps(lifted, b.data))

    def ldiv(self, f: Arrow, g: Arrow, alpha: TargetArrow) -> Optional[TargetArrow]:
        return TargetArrow(self.push(f, alpha.src), alpha.tgt, g, alpha.data)

    def rdiv(self, alpha: TargetArrow, f: Arrow, g: Arrow) -> Optional[TargetArrow]:
        source = self.push(f, alpha.src)
        data = transpose_maps(alpha.data, source, arrow_length(g))
        return TargetArrow(alpha.src, self.pull(g, alpha.tgt), f, data)


class DisplacementTarget(CleavedTarget):
    """
    B(ℕ) 上の (ℤ, ≤)

    対象は整数、x ⊢_n y の射は x + n ≤ y のとき唯一つ。
    """

    name = 'displacement'

    def _arrow(self, x: int, y: int, base: Arrow) -> Optional[TargetArrow]:
        return TargetArrow(x, y, base) if x + arrow_length(base) <= y else None

    def atom(self, obj: Any) -> int:
        return 0

    def push(self, f: Arrow, X: int) -> int:
        return X + arrow_length(f)

    def pull(self, g: Arrow, Y: int) -> int:
        return Y - arrow_length(g)

    def axiom(self, delta: Arrow, base: Arrow, X: int, Y: int) -> TargetArrow:
        return TargetArrow(X, Y, base)

    def opcart(self, f: Arrow, X: int) -> TargetArrow:
        return TargetArrow(X, self.push(f, X), f)

    def cart(self, g: Arrow, Y: int) -> TargetArrow:
        return TargetArrow(self.pull(g, Y), Y, g)

    def compose(self, a: TargetArrow, b: TargetArrow) -> TargetArrow:
        return TargetArrow(a.src, b.tgt, self.category.compose(a.base, b.base))

    def ldiv(self, f: Arrow, g: Arrow, alpha: TargetArrow) -> Optional[TargetArrow]:
        return self._arrow(self.push(f, alpha.src), alpha.tgt, g)

    def rdiv(self, alpha: TargetArrow, f: Arrow, g: Arrow) -> Optional[TargetArrow]:
        return self._arrow(alpha.src, self.pull(g, alpha.tgt), f)
