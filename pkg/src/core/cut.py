"""
カット（導出の合成）

主要ケースと可換ケースの等式で定義する。左導出が左規則で
右導出が右規則のときは左導出の規則を先に可換させる。
"""

import logging

from base.errors import NonComposable

from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from .fibration import FreeBifibration

logger = logging.getLogger(__name__)


def cut(fib: FreeBifibration, a: Derivation, b: Derivation) -> Derivation:
    """
    α : S ⊢_g T と β : T ⊢_h U から S ⊢_{gh} U の導出を作る

    Raises:
        NonComposable: 右辺と左辺の論理式が一致しない場合
    """
    left = fib.judgment(a)
    right = fib.judgment(b)
    if left.rhs != right.lhs:
        raise NonComposable(
            "導出をカットできません",
            f"左導出の右辺 {left.rhs!r} と右導出の左辺 {right.lhs!r} が一致しません",
            "境界の論理式が等しい導出の組を渡してください",
        )
    return _cut(fib, a, b)


def _cut(fib: FreeBifibration, a: Derivation, b: Derivation) -> Derivation:
    if isinstance(a, AtomAx) and isinstance(b, AtomAx):
        return AtomAx(fib.domain.compose(a.delta, b.delta))
    # 左導出の左規則を先に
    if isinstance(a, LDiv):
        h = fib.project(b)
        return LDiv(a.f, fib.compose(a.g, h), _cut(fib, a.body, b))
    if isinstance(a, LMult):
        return LMult(a.g, _cut(fib, a.body, b))
    # 右導出の右規則
    if isinstance(b, RMult):
        return RMult(_cut(fib, a, b.body), b.f)
    if isinstance(b, RDiv):
        g = fib.project(a)
        return RDiv(_cut(fib, a, b.body), fib.compose(g, b.f), b.g)
    # 主要ケース
    if isinstance(a, RMult) and isinstance(b, LDiv):
        return _cut(fib, a.body, b.body)
    if isinstance(a, RDiv) and isinstance(b, LMult):
        return _cut(fib, a.body, b.body)
    raise NonComposable(
        "カットの場合分けに該当しません",
        f"{type(a).__name__} と {type(b).__name__} の組は境界が一致しません",
        "導出の判断を確認してください",
    )


def cut_all(fib: FreeBifibration, *derivations: Derivation) -> Derivation:
    """左から順にカットする"""
    result = derivations[0]
    for d in derivations[1:]:
        result = cut(fib, result, d)
    return result
