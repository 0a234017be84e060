"""
自由 (P,N)-ファイブレーションの文脈

関手 p : D -> C と push/pull の射クラスを束ね、論理式の形成規則と
導出の判断推論を提供する。P = N = 'all' のとき自由双ファイブレーション。
"""

import logging
from typing import Any, Iterable, List, Optional

from base.cache import BoundedCache
from base.category import Arrow, CategoryBackend
from base.errors import IllFormed
from base.functor import FunctorDef

from config.environment import get_search_config

from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from .formula import Atom, Formula, Judgment, Pull, Push

logger = logging.getLogger(__name__)


class FreeBifibration:
    """
    p : D -> C 上の自由 (P,N)-ファイブレーション

    Args:
        functor: FunctorDef - 生成関手 p
        push_class: str - Push を許す C の射クラス名（P）
        pull_class: str - Pull を許す C の射クラス名（N）
        name: str - 表示名（シード名など）
    """

    def __init__(self, functor: FunctorDef, push_class: str = 'all', pull_class: str = 'all',
                 name: str = 'custom'):
        self.functor = functor
        self.base: CategoryBackend = functor.target
        self.domain: CategoryBackend = functor.source
        self.push_class = self.base.arrow_class(push_class)
        self.pull_class = self.base.arrow_class(pull_class)
        self.name = name
        self._judgments: BoundedCache[Judgment] = BoundedCache(get_search_config()['cache_size'])

    def is_fp(self) -> bool:
        """P と N の両方で FP が宣言されているか"""
        return self.base.is_fp(self.push_class.name) and self.base.is_fp(self.pull_class.name)

    @property
    def is_bifibration(self) -> bool:
        return self.push_class.name == 'all' and self.pull_class.name == 'all'

    # --- 論理式の形成 ---

    def atom(self, x: Any) -> Atom:
        if not self.domain.has_object(x):
            raise IllFormed(
                f"原子 {x!r} は D の対象ではありません",
                f"{self.domain.name} の対象一覧に含まれていません",
                "原子には D の対象を指定してください",
            )
        return Atom(x, self.functor.on_object(x))

    def check_push(self, f: Arrow, S: Formula):
        if S.ref != f.dom:
            raise IllFormed(
                f"Push({self.base.show(f)}, -) を形成できません",
                f"本体の載る対象 {S.ref!r} と dom={f.dom!r} が一致しません",
                "射の始点に載る論理式を渡してください",
                node=S,
            )
        if not self.push_class.contains(f):
            raise IllFormed(
                f"{self.base.show(f)} に沿った Push は許されていません",
                f"射がクラス {self.push_class.name} に属しません",
                "push クラスの射を使ってください",
                node=S,
            )

    def check_pull(self, g: Arrow, T: Formula):
        if T.ref != g.cod:
            raise IllFormed(
                f"Pull({self.base.show(g)}, -) を形成できません",
                f"本体の載る対象 {T.ref!r} と cod={g.cod!r} が一致しません",
                "射の終点に載る論理式を渡してください",
                node=T,
            )
        if not self.pull_class.contains(g):
            raise IllFormed(
                f"{self.base.show(g)} に沿った Pull は許されていません",
                f"射がクラス {self.pull_class.name} に属しません",
                "pull クラスの射を使ってください",
                node=T,
            )

    def push(self, f: Arrow, S: Formula) -> Push:
        self.check_push(f, S)
        return Push(f, S)

    def pull(self, g: Arrow, T: Formula) -> Pull:
        self.check_pull(g, T)
        return Pull(g, T)

    def check_formula(self, S: Formula) -> Formula:
        """形成規則を再帰的に確認して S を返す"""
        if isinstance(S, Atom):
            if self.functor.on_object(S.obj) != S.over:
                raise IllFormed(
                    f"原子 {S.obj!r} の載る対象が不正です",
                    f"p({S.obj!r}) と {S.over!r} が一致しません",
                    "FreeBifibration.atom で原子を作ってください",
                    node=S,
                )
            return S
        self.check_formula(S.body)
        if isinstance(S, Push):
            self.check_push(S.arrow, S.body)
        else:
            self.check_pull(S.arrow, S.body)
        return S

    # --- 基底の射 ---

    def compose(self, a: Arrow, b: Arrow) -> Arrow:
        return self.base.compose(a, b)

    def composite(self, arrows: Iterable[Arrow], obj: Any) -> Arrow:
        """射列の合成 ⌊π⌋（空列なら obj の恒等射）"""
        return self.base.compose_all(list(arrows), obj)

    def axioms(self, x: Any, y: Any, f: Arrow) -> List[Arrow]:
        return self.functor.axioms(x, y, f)

    # --- 判断推論 ---

    def judgment(self, d: Derivation) -> Judgment:
        """
        導出が定める唯一の判断を推論する

        Raises:
            IllFormed: 規則の側条件が満たされない場合
        """
        cached = self._judgments.get(d)
        if cached is not None:
            return cached
        result = self._infer(d)
        self._judgments.put(d, result)
        return result

    def _infer(self, d: Derivation) -> Judgment:
        if isinstance(d, AtomAx):
            delta = d.delta
            return Judgment(self.atom(delta.dom), self.functor.on_arrow(delta), self.atom(delta.cod))
        premise = self.judgment(d.body)
        if isinstance(d, LDiv):
            self._require_factor(d, d.f, d.g, premise.base)
            self.check_push(d.f, premise.lhs)
            return Judgment(Push(d.f, premise.lhs), d.g, premise.rhs)
        if isinstance(d, RMult):
            if premise.base.cod != d.f.dom:
                raise IllFormed(
                    "右乗算 α·f^ の射が合成できません",
                    f"cod(α の基底)={premise.base.cod!r} と dom(f)={d.f.dom!r} が一致しません",
                    "f の始点を前提の右辺の対象に合わせてください",
                    node=d,
                )
            self.check_push(d.f, premise.rhs)
            return Judgment(premise.lhs, self.compose(premise.base, d.f), Push(d.f, premise.rhs))
        if isinstance(d, LMult):
            if d.g.cod != premise.base.dom:
                raise IllFormed(
                    "左乗算 g_·α の射が合成できません",
                    f"cod(g)={d.g.cod!r} と dom(α の基底)={premise.base.dom!r} が一致しません",
                    "g の終点を前提の左辺の対象に合わせてください",
                    node=d,
                )
            self.check_pull(d.g, premise.lhs)
            return Judgment(Pull(d.g, premise.lhs), self.compose(d.g, premise.base), premise.rhs)
        if isinstance(d, RDiv):
            self._require_factor(d, d.f, d.g, premise.base)
            self.check_pull(d.g, premise.rhs)
            return Judgment(premise.lhs, d.f, Pull(d.g, premise.rhs))
        raise IllFormed(
            f"未知の導出ノード {type(d).__name__} です",
            "導出は AtomAx/LDiv/RMult/LMult/RDiv のいずれかです",
            "core.derivation の構成子を使ってください",
            node=d,
        )

    def _require_factor(self, node: Derivation, f: Arrow, g: Arrow, h: Arrow):
        if f.cod != g.dom or self.compose(f, g) != h:
            raise IllFormed(
                f"除算 {type(node).__name__} の分解が一致しません",
                f"{self.base.show(f)}·{self.base.show(g)} が前提の基底 {self.base.show(h)} になりません",
                "h = f·g となる分解を指定してください",
                node=node,
            )

    def project(self, d: Derivation) -> Arrow:
        """導出の載る基底の射（射影関手 Bifib(p) -> C）"""
        return self.judgment(d).base

    def is_valid(self, d: Derivation) -> bool:
        try:
            self.judgment(d)
            return True
        except IllFormed:
            return False

    def __repr__(self):
        return (f"FreeBifibration({self.name}: {self.domain.name} -> {self.base.name}, "
                f"P={self.push_class.name}, N={self.pull_class.name})")


def bifibration(functor: FunctorDef, name: Optional[str] = None) -> FreeBifibration:
    """P = N = all の自由双ファイブレーション"""
    return FreeBifibration(functor, 'all', 'all', name or 'custom')
