"""
関手 p : D -> C の定義
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Union

from .backends import DiscreteCat, FreeCat, point
from .category import Arrow, CategoryBackend, sort_arrows
from .errors import PresentationError

logger = logging.getLogger(__name__)


class FunctorDef:
    """
    関手の定義（対象写像と射写像）

    Args:
        source: CategoryBackend - 定義域 D
        target: CategoryBackend - 値域 C
        object_map: dict または callable - 対象の像
        arrow_map: dict（生成子名 -> C の射）または callable（D の射 -> C の射）。
            省略時は恒等射のみを写す（離散な D 向け）
    """

    def __init__(self, source: CategoryBackend, target: CategoryBackend,
                 object_map: Union[Dict[Any, Any], Callable[[Any], Any]],
                 arrow_map: Union[None, Dict[str, Arrow], Callable[[Arrow], Arrow]] = None):
        self.source = source
        self.target = target
        self._object_map = object_map
        self._arrow_map = arrow_map
        self.is_identity_functor = False

    def on_object(self, x: Any) -> Any:
        if callable(self._object_map):
            return self._object_map(x)
        if x not in self._object_map:
            raise PresentationError(
                f"対象 {x!r} の像が定義されていません",
                "関手ファイルに object 行がありません",
                f"'object {x} -> <C の対象>' を追加してください",
            )
        return self._object_map[x]

    def on_arrow(self, a: Arrow) -> Arrow:
        if callable(self._arrow_map):
            return self._arrow_map(a)
        if self.source.is_identity(a):
            return self.target.identity(self.on_object(a.dom))
        if isinstance(self.source, FreeCat) and isinstance(self._arrow_map, dict):
            images = []
            for label in a.payload:
                if label not in self._arrow_map:
                    raise PresentationError(
                        f"生成子 {label} の像が定義されていません",
                        "関手ファイルに arrow 行がありません",
                        f"'arrow {label} -> <C の射>' を追加してください",
                    )
                images.append(self._arrow_map[label])
            return self.target.compose_all(images)
        raise PresentationError(
            f"射 {self.source.show(a)} の像を計算できません",
            "射写像が与えられていません",
            "arrow_map を callable か生成子辞書で指定してください",
        )

    def check(self) -> bool:
        """生成子上で端点と恒等射の保存を確認する"""
        for x in self.source.objects():
            image = self.on_object(x)
            if not self.target.has_object(image):
                raise PresentationError(
                    f"対象 {x!r} の像 {image!r} が値域にありません",
                    f"{self.target.name} の対象ではありません",
                    "object 行か値域の打ち切りレベルを見直してください",
                )
            if self.on_arrow(self.source.identity(x)) != self.target.identity(image):
                raise PresentationError(
                    f"恒等射 id:{x} が保存されません",
                    "射写像が恒等射を恒等射に写していません",
                    "arrow_map を修正してください",
                )
        for g in self.source.generators():
            image = self.on_arrow(g)
            if image.dom != self.on_object(g.dom) or image.cod != self.on_object(g.cod):
                raise PresentationError(
                    f"生成子 {self.source.show(g)} の像の端点が一致しません",
                    f"像 {self.target.show(image)} の dom/cod が対象写像と食い違います",
                    "arrow 行の像を修正してください",
                )
        return True

    def axioms(self, x: Any, y: Any, f: Arrow) -> List[Arrow]:
        """p(δ) = f となる D の射 δ : x -> y（初期公理）を正準順に列挙"""
        if self.is_identity_functor:
            return [f] if (f.dom, f.cod) == (x, y) else []
        if isinstance(self.source, DiscreteCat):
            if x == y and self.target.is_identity(f) and f.dom == self.on_object(x):
                return [self.source.identity(x)]
            return []
        return sort_arrows(d for d in self.source.hom(x, y) if self.on_arrow(d) == f)

    def __repr__(self):
        return f"FunctorDef({self.source.name} -> {self.target.name})"


def identity_functor(category: CategoryBackend) -> FunctorDef:
    """恒等関手 Id_C（ジグザグ二重圏の土台）"""
    functor = FunctorDef(category, category, lambda x: x, lambda a: a)
    functor.is_identity_functor = True
    return functor


def constant_point(target: CategoryBackend, obj: Any, source: Optional[DiscreteCat] = None) -> FunctorDef:
    """終対象圏 1 から obj への関手"""
    source = source or point()
    return FunctorDef(source, target, {'*': obj})
