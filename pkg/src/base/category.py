"""
基底圏バックエンドの共通インターフェース

射は (dom, cod, payload) の不変値として表し、等価性は payload の
外延的比較で判定する。合成は図式順（a·b は a の後に b）。
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from .errors import NonComposable, PresentationError, SquareNotCommuting

logger = logging.getLogger(__name__)


def object_key(x: Any) -> Tuple:
    """対象の全順序キー（整数は数値順、それ以外は文字列順）"""
    if isinstance(x, int):
        return (0, x, '')
    return (1, 0, str(x))


@dataclass(frozen=True)
class Arrow:
    """基底圏または定義域の射"""
    dom: Any
    cod: Any
    payload: Tuple = ()

    def order_key(self) -> Tuple:
        return (object_key(self.dom), object_key(self.cod), len(self.payload), self.payload)

    def __repr__(self):
        return f"Arrow({self.dom!r}->{self.cod!r}, {self.payload!r})"


def sort_arrows(arrows: Iterable[Arrow]) -> List[Arrow]:
    """正準順に並べ、重複を除く"""
    unique = {a: None for a in arrows}
    return sorted(unique, key=Arrow.order_key)


@dataclass(frozen=True)
class ArrowClass:
    """射のクラス（P, N など）"""
    name: str
    predicate: Callable[[Arrow], bool]

    def contains(self, arrow: Arrow) -> bool:
        return self.predicate(arrow)

    def out_of(self, backend: 'CategoryBackend', x: Any) -> List[Arrow]:
        """x から出るクラス内の射を正準順に列挙"""
        found = []
        for y in backend.objects():
            found.extend(a for a in backend.hom(x, y) if self.contains(a))
        return sort_arrows(found)

    def into(self, backend: 'CategoryBackend', y: Any) -> List[Arrow]:
        """y へ入るクラス内の射を正準順に列挙"""
        found = []
        for x in backend.objects():
            found.extend(a for a in backend.hom(x, y) if self.contains(a))
        return sort_arrows(found)


ALL = ArrowClass('all', lambda arrow: True)


class CategoryBackend:
    """
    基底圏の抽象クラス

    サブクラスは objects / identity / _compose / hom を実装する。
    除算とフィラーは hom の総当たりが既定で、効率的な
    実装を持つバックエンドは上書きする。
    """

    name = 'abstract'
    # hom が有限で BFS が停止する
    locally_finite = False

    def __init__(self):
        self._classes: Dict[str, ArrowClass] = {'all': ALL}
        self._fp: Dict[str, bool] = {'all': False}

    # --- 対象 ---

    def objects(self) -> List[Any]:
        raise NotImplementedError

    def has_object(self, x: Any) -> bool:
        return x in self.objects()

    def parse_object(self, token: str) -> Any:
        for x in self.objects():
            if str(x) == token:
                return x
        raise PresentationError(
            f"未知の対象 '{token}' です",
            f"{self.name} の対象一覧に含まれていません",
            "提示ファイルの objects 行を確認してください",
        )

    # --- 射 ---

    def identity(self, x: Any) -> Arrow:
        raise NotImplementedError

    def _compose(self, a: Arrow, b: Arrow) -> Arrow:
        raise NotImplementedError

    def compose(self, a: Arrow, b: Arrow) -> Arrow:
        """図式順の合成 a·b"""
        if a.cod != b.dom:
            raise NonComposable(
                "射を合成できません",
                f"cod({self.show(a)})={a.cod!r} と dom({self.show(b)})={b.dom!r} が一致しません",
                "合成順序（図式順）と端点を確認してください",
            )
        return self._compose(a, b)

    def compose_all(self, arrows: Iterable[Arrow], obj: Any = None) -> Arrow:
        """列の合成。空列なら obj の恒等射"""
        result: Optional[Arrow] = None
        for arrow in arrows:
            result = arrow if result is None else self.compose(result, arrow)
        if result is None:
            if obj is None:
                raise NonComposable(
                    "空の射列を合成できません",
                    "恒等射を作る対象が指定されていません",
                    "obj 引数を渡してください",
                )
            return self.identity(obj)
        return result

    def is_identity(self, a: Arrow) -> bool:
        return a.dom == a.cod and a == self.identity(a.dom)

    def hom(self, x: Any, y: Any) -> List[Arrow]:
        raise NotImplementedError

    def generators(self) -> List[Arrow]:
        return []

    # --- 除算・フィラー ---

    def left_divisors(self, a: Arrow, h: Arrow) -> List[Arrow]:
        """a·g = h を満たす g の一覧"""
        if a.dom != h.dom:
            return []
        return [g for g in self.hom(a.cod, h.cod) if self.compose(a, g) == h]

    def right_divisors(self, h: Arrow, b: Arrow) -> List[Arrow]:
        """g·b = h を満たす g の一覧"""
        if b.cod != h.cod:
            return []
        return [g for g in self.hom(h.dom, b.dom) if self.compose(g, b) == h]

    def fillers(self, f: Arrow, x: Arrow, y: Arrow, k: Arrow) -> List[Arrow]:
        """
        可換四角形 f·y = x·k の対角フィラー e（f·e = x かつ e·k = y）

        Raises:
            SquareNotCommuting: 四角形が可換でない場合
        """
        if f.dom != x.dom or y.cod != k.cod or f.cod != y.dom or x.cod != k.dom \
                or self.compose(f, y) != self.compose(x, k):
            raise SquareNotCommuting(
                "フィラー問い合わせの四角形が可換ではありません",
                f"{self.show(f)}·{self.show(y)} と {self.show(x)}·{self.show(k)} が一致しません",
                "f·y = x·k となる四つ組を渡してください",
            )
        return [e for e in self.left_divisors(f, x) if self.compose(e, k) == y]

    def le_fact(self, a: Arrow, b: Arrow, c: Arrow, d: Arrow) -> bool:
        """分解の前順序 (a,b) ≤ (c,d)：c = a·e かつ b = e·d なる e が存在"""
        return bool(self.fillers(a, c, b, d))

    # --- クラス・FP ---

    def arrow_class(self, name: str) -> ArrowClass:
        if name not in self._classes:
            raise PresentationError(
                f"射クラス '{name}' は {self.name} にありません",
                f"利用可能なクラス: {sorted(self._classes)}",
                "push/pull クラス名を確認してください",
            )
        return self._classes[name]

    def class_names(self) -> List[str]:
        return sorted(self._classes)

    def is_fp(self, class_name: str = 'all') -> bool:
        return self._fp.get(class_name, False)

    # --- 表示・構文 ---

    def show(self, a: Arrow) -> str:
        if self.is_identity(a):
            return f"id:{a.dom}"
        return repr(a.payload)

    def _parse_simple(self, token: str) -> Arrow:
        raise PresentationError(
            f"射トークン '{token}' を解釈できません",
            f"{self.name} の生成子名ではありません",
            "生成子名・'id:<対象>'・'.' 区切りの合成を使ってください",
        )

    def parse_arrow(self, token: str) -> Arrow:
        """射トークンを解釈する（'.' 区切りは図式順の合成）"""
        parts = token.split('.')
        arrows = []
        for part in parts:
            if part.startswith('id:'):
                arrows.append(self.identity(self.parse_object(part[3:])))
            else:
                arrows.append(self._parse_simple(part))
        return self.compose_all(arrows)

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"
