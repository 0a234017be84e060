"""
総当たりの独立オラクル
"""

import itertools
from dataclasses import dataclass
from typing import List, Tuple

from base.errors import IllFormed

from core.derivation import Derivation
from core.fibration import FreeBifibration

from .targets import SimplexTarget, TreeTarget, interpret
from .trees import LayerMaps

MAX_ORDINAL = 8


@dataclass(frozen=True)
class MonotoneMap:
    source: int
    target: int
    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source or any(a > b for a, b in zip(self.images, self.images[1:])):
            raise IllFormed(
                "単調写像ではありません",
                f"像 {self.images} が ⟨{self.source}⟩ -> ⟨{self.target}⟩ の単調写像になっていません",
                "広義単調増加の像を指定してください",
            )


def monotone_oracle(m: int, n: int) -> List[MonotoneMap]:
    """⟨m⟩ -> ⟨n⟩ の単調写像すべて（像の辞書順）"""
    if not (0 <= m <= MAX_ORDINAL and 0 <= n <= MAX_ORDINAL):
        raise IllFormed(
            f"⟨{m}⟩ -> ⟨{n}⟩ はオラクルの範囲外です",
            f"m, n は 0 以上 {MAX_ORDINAL} 以下です",
            "小さい順序数で呼び出してください",
        )
    return [MonotoneMap(m, n, images) for images in itertools.combinations_with_replacement(range(n), m)]


def simplex_image(fib: FreeBifibration, d: Derivation) -> MonotoneMap:
    """p₂ 上の導出を Δ/Δ⊥ の単調写像として読む"""
    arrow = interpret(fib, d, SimplexTarget(fib.base))
    return MonotoneMap(arrow.src, arrow.tgt, arrow.data)


def tree_morphism_oracle(fib: FreeBifibration, d: Derivation) -> LayerMaps:
    """
    p_ω 上のファイバー k の導出が表す木の射（高さごとの単調写像）

    基底が恒等射でない導出では L^u X -> Y の族を返す。
    """
    return interpret(fib, d, TreeTarget(fib.base)).data
