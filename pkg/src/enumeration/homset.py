"""
ホムセット列挙と等価判定

FP な基底では極大多重集中探索で正準形を列挙し、そうでなければ
局所有限性を頼りに置換同値類を BFS で数える。
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from base.category import Arrow
from base.errors import IllFormed, NonComposable, NotFP, UndecidableConfiguration

from config.environment import get_search_config
from core.cut import cut
from core.derivation import Derivation, identity
from core.fibration import FreeBifibration
from core.formula import Formula
from core.permeq import permeq_class, permeq_decide_bfs
from core.search import permeq_classes
from core.sexpr import show_derivation
from focusing.maxsearch import MaxSearch, max_search
from focusing.multi import MultiDerivation
from focusing.rewrite import normalize
from focusing.strengthen import to_derivation, to_multi

logger = logging.getLogger(__name__)

MODE_NORMAL_FORM = 'normal-form'
MODE_BFS = 'bfs'


@dataclass
class HomsetResult:
    """Bifib(p)_f(S,T) の列挙結果。derivations は重複なし"""
    derivations: List[MultiDerivation]
    count: int
    stats: Dict[str, Any] = field(default_factory=dict)

    def __len__(self):
        return self.count

    def __iter__(self):
        return iter(self.derivations)


@dataclass(frozen=True)
class EquivClassToken:
    """
    置換同値類の比較用トークン

    同じ判断の二つの導出は、トークンが等しいとき且つそのときに限り置換同値。
    """
    mode: str
    representative: Union[MultiDerivation, str]


def _budget(budget: Optional[int]) -> int:
    return budget if budget is not None else get_search_config()['budget']


def _require_decidable(fib: FreeBifibration):
    if not fib.is_fp() and not fib.base.locally_finite:
        raise UndecidableConfiguration(
            "等価判定の手段がありません",
            f"{fib.base.name} は FP でも局所有限でもありません",
            "FP な射クラスを宣言するか hom が有限なバックエンドを使ってください",
        )


def homset(fib: FreeBifibration, S: Formula, f: Arrow, T: Formula,
           budget: Optional[int] = None) -> HomsetResult:
    """
    S ⊢_f T の射をすべて列挙する

    Raises:
        NotFP: FP でも局所有限でもない基底の場合
        BudgetExceeded: BFS の予算を使い切った場合
    """
    if fib.is_fp():
        searcher = MaxSearch(fib)
        found = list(max_search(fib, S, f, T, searcher=searcher))
        stats = {'mode': MODE_NORMAL_FORM, 'memo': len(searcher._memo)}
        logger.debug("max_search: %d proofs, %d memoized judgments", len(found), stats['memo'])
        return HomsetResult(found, len(found), stats)
    if not fib.base.locally_finite:
        raise NotFP(
            "ホムセットを列挙できません",
            f"{fib.base.name} は FP ではなく局所有限とも宣言されていません",
            "FP な基底を使うか locally_finite なバックエンドを使ってください",
        )
    classes = permeq_classes(fib, S, f, T, _budget(budget))
    found = [to_multi(fib, members[0]) for members in classes]
    stats = {'mode': MODE_BFS, 'class_sizes': [len(members) for members in classes]}
    logger.debug("bfs homset: %d classes", len(found))
    return HomsetResult(found, len(found), stats)


def class_token(fib: FreeBifibration, d: Derivation, budget: Optional[int] = None) -> EquivClassToken:
    """
    導出の置換同値類のトークン

    FP な基底では正規形、それ以外では BFS 類の中で表示が最小の導出。
    """
    _require_decidable(fib)
    if fib.is_fp():
        normal, _ = normalize(fib, to_multi(fib, d))
        return EquivClassToken(MODE_NORMAL_FORM, normal)
    members = permeq_class(fib, d, _budget(budget))
    return EquivClassToken(MODE_BFS, min(show_derivation(fib, m) for m in members))


def decide(fib: FreeBifibration, a: Derivation, b: Derivation,
           budget: Optional[int] = None) -> Tuple[bool, str]:
    """decide_equal と判定に使った手段"""
    if fib.judgment(a) != fib.judgment(b):
        raise NonComposable(
            "異なる判断の導出は比較できません",
            f"{fib.judgment(a)} と {fib.judgment(b)} が一致しません",
            "同じ判断の導出の組を渡してください",
        )
    _require_decidable(fib)
    if fib.is_fp():
        left, _ = normalize(fib, to_multi(fib, a))
        right, _ = normalize(fib, to_multi(fib, b))
        return left == right, MODE_NORMAL_FORM
    return permeq_decide_bfs(fib, a, b, _budget(budget)), MODE_BFS


def decide_equal(fib: FreeBifibration, a: Derivation, b: Derivation,
                 budget: Optional[int] = None) -> bool:
    """
    a ≃ b の判定

    Raises:
        NonComposable: 判断が異なる場合
        UndecidableConfiguration: FP でも局所有限でもない場合
        BudgetExceeded: BFS の予算を使い切った場合
    """
    return decide(fib, a, b, budget)[0]


def logical_equiv(fib: FreeBifibration, S1: Formula, S2: Formula,
                  budget: Optional[int] = None) -> Optional[Tuple[Derivation, Derivation]]:
    """
    S1 と S2 の論理的同値の証人 (S1 ⊢ S2, S2 ⊢ S1) を探す

    両方向のホムセットの積を走査し、カットが恒等射に置換同値な組を返す。
    """
    if S1.ref != S2.ref:
        raise IllFormed(
            "論理的同値は同じ対象上の論理式の間でしか定義されません",
            f"{S1.ref!r} と {S2.ref!r} が一致しません",
            "同じファイバーの論理式を渡してください",
        )
    ident = fib.base.identity(S1.ref)
    forward = [to_derivation(fib, m) for m in homset(fib, S1, ident, S2, budget)]
    if not forward:
        return None
    backward = [to_derivation(fib, m) for m in homset(fib, S2, ident, S1, budget)]
    id1, id2 = identity(fib, S1), identity(fib, S2)
    for there in forward:
        for back in backward:
            if decide_equal(fib, cut(fib, there, back), id1, budget) \
                    and decide_equal(fib, cut(fib, back, there), id2, budget):
                return there, back
    return None
