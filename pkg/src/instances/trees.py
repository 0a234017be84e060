"""
平面木と歩道

平面木は入れ子リスト（子の組）で持ち、関手表現 T : ω^op -> Δ
（高さごとの親写像）は必要なときに導出する。印付き木は最左枝上の
高さ k の頂点に印を持ち、p_ω のファイバー k の対象に対応する。

論理式は右から左への走査の歩道として読む。最内の結合子が最初の一歩。
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from base.backends import _monotone_choices
from base.category import Arrow
from base.errors import IllFormed, NotAWalk, PresentationError

from core.fibration import FreeBifibration
from core.formula import Formula, connectives

logger = logging.getLogger(__name__)

LayerMaps = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class PlaneTree:
    children: Tuple['PlaneTree', ...] = ()

    @property
    def height(self) -> int:
        return 1 + max(c.height for c in self.children) if self.children else 0

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def parents(self) -> Tuple[Tuple[int, ...], ...]:
        """関手表現：parents[h] は高さ h+1 の各頂点の親（高さ h での添字）"""
        result = []
        layer: List[PlaneTree] = [self]
        while True:
            nxt, par = [], []
            for i, vertex in enumerate(layer):
                for child in vertex.children:
                    nxt.append(child)
                    par.append(i)
            if not nxt:
                return tuple(result)
            result.append(tuple(par))
            layer = nxt

    def counts(self) -> Tuple[int, ...]:
        """|T(h)|（h = 0..高さ）"""
        return (1,) + tuple(len(p) for p in self.parents())

    @classmethod
    def from_parents(cls, parents: Sequence[Sequence[int]]) -> 'PlaneTree':
        counts = [1] + [len(p) for p in parents]
        for h, par in enumerate(parents):
            if any(a > b for a, b in zip(par, par[1:])) or any(not 0 <= v < counts[h] for v in par):
                raise IllFormed(
                    "親写像が単調ではありません",
                    f"高さ {h + 1} の親 {tuple(par)} が ⟨{counts[h]}⟩ への単調写像になっていません",
                    "広義単調増加で値域内の親を指定してください",
                )
        layer = [cls() for _ in range(counts[-1])]
        for h in range(len(parents) - 1, -1, -1):
            layer = [cls(tuple(layer[j] for j, p in enumerate(parents[h]) if p == i))
                     for i in range(counts[h])]
        return layer[0]

    def to_list(self) -> list:
        return [c.to_list() for c in self.children]

    @classmethod
    def from_list(cls, nested: list) -> 'PlaneTree':
        return cls(tuple(cls.from_list(c) for c in nested))


@dataclass(frozen=True)
class MarkedTree:
    """最左枝上の高さ mark の頂点に印を持つ平面木"""
    tree: PlaneTree
    mark: int = 0

    def __post_init__(self):
        node = self.tree
        for _ in range(self.mark):
            if not node.children:
                raise IllFormed(
                    f"高さ {self.mark} に印を付けられません",
                    "最左枝がその高さまで届いていません",
                    "印の高さを最左枝の長さ以下にしてください",
                )
            node = node.children[0]

    def counts(self) -> Tuple[int, ...]:
        return self.tree.counts()


def example_tree_pair() -> Tuple[MarkedTree, MarkedTree]:
    """11 個の射を持つ高さ 2 と高さ 3 の木の組（印は根）"""
    source = PlaneTree.from_parents([(0, 0, 0), (0, 2, 2)])
    target = PlaneTree.from_parents([(0, 0, 0), (0, 0, 2), (0,)])
    return MarkedTree(source), MarkedTree(target)


def one_vertex() -> MarkedTree:
    return MarkedTree(PlaneTree(), 0)


def _grow(node: PlaneTree, depth: int) -> PlaneTree:
    if depth == 0:
        return PlaneTree((PlaneTree(),) + node.children)
    return PlaneTree((_grow(node.children[0], depth - 1),) + node.children[1:])


def grow(mt: MarkedTree) -> MarkedTree:
    """L_k：印の頂点に新しい葉を最左の子として生やし、印をそこへ移す"""
    return MarkedTree(_grow(mt.tree, mt.mark), mt.mark + 1)


def lower(mt: MarkedTree) -> MarkedTree:
    """R_k：印を親へ下ろす"""
    if mt.mark == 0:
        raise NotAWalk(
            "印を根より下へ移せません",
            "歩道の高さが負になります",
            "Dyck 語（途中で 0 を下回らない歩道）を渡してください",
        )
    return MarkedTree(mt.tree, mt.mark - 1)


# --- 歩道 ---

def arrow_length(a: Arrow) -> int:
    """ω の射は cod - dom、B(ℕ) の射は自然数そのもの"""
    if a.dom == a.cod and len(a.payload) == 1 and isinstance(a.payload[0], int):
        return a.payload[0]
    return a.cod - a.dom


def walk_steps(S: Formula) -> List[int]:
    """最内から順の ±1 の列"""
    steps: List[int] = []
    for kind, arrow in reversed(connectives(S)):
        n = arrow_length(arrow)
        steps.extend([1 if kind == 'push' else -1] * n)
    return steps


def walk_displacement(S: Formula) -> int:
    """正味の変位（途中で負になってもよい）"""
    return sum(walk_steps(S))


def tree_of_walk(steps: Sequence[int]) -> MarkedTree:
    """
    Raises:
        NotAWalk: 途中で高さが負になる場合
    """
    mt = one_vertex()
    for position, step in enumerate(steps):
        if step > 0:
            mt = grow(mt)
        elif mt.mark == 0:
            raise NotAWalk(
                "木として読めない歩道です",
                f"{position + 1} 歩目で高さが負になります",
                "Dyck 語に対応する論理式を渡してください",
            )
        else:
            mt = lower(mt)
    return mt


def tree_of_formula(S: Formula) -> MarkedTree:
    """p_ω（または B(ℕ)）上の論理式を印付き木に読む"""
    return tree_of_walk(walk_steps(S))


def _full(node: PlaneTree) -> List[int]:
    steps: List[int] = []
    for child in reversed(node.children):
        steps += [1] + _full(child) + [-1]
    return steps


def _marked(node: PlaneTree, depth: int, mark: int) -> List[int]:
    if depth == mark:
        return _full(node)
    steps: List[int] = []
    for child in reversed(node.children[1:]):
        steps += [1] + _full(child) + [-1]
    return steps + [1] + _marked(node.children[0], depth + 1, mark)


def walk_of_tree(mt: MarkedTree) -> List[int]:
    """右から左への走査（印で止まる）"""
    return _marked(mt.tree, 0, mt.mark)


def formula_of_tree(fib: FreeBifibration, mt: MarkedTree) -> Formula:
    """
    印付き木の Dyck 符号化（p_ω 上、mark 上の論理式）

    Raises:
        PresentationError: 木の高さが基底の打ち切りを超える場合
    """
    S: Formula = fib.atom('*')
    height = 0
    for step in walk_of_tree(mt):
        lo = height if step > 0 else height - 1
        arrows = fib.base.hom(lo, lo + 1) if fib.base.has_object(lo + 1) else []
        if not arrows:
            raise PresentationError(
                f"高さ {lo + 1} は打ち切りレベルを超えています",
                f"{fib.base.name} に {lo} -> {lo + 1} の射がありません",
                "pomega のレベルを木の高さ以上にしてください",
            )
        S = fib.push(arrows[0], S) if step > 0 else fib.pull(arrows[0], S)
        height += step
    return S


# --- 木の射（高さごとの単調写像の族） ---

def identity_maps(mt: MarkedTree) -> LayerMaps:
    return tuple(tuple(range(c)) for c in mt.counts())


def compose_maps(a: LayerMaps, b: LayerMaps) -> LayerMaps:
    """図式順 a·b"""
    return tuple(tuple(b[h][x] for x in layer) for h, layer in enumerate(a))


def grow_maps(phi: LayerMaps, mark: int) -> LayerMaps:
    """L_mark を射に施す：新しい葉同士を対応させ、残りは一つずらす"""
    above = tuple(x + 1 for x in phi[mark + 1]) if mark + 1 < len(phi) else ()
    layers = list(phi) + ([()] if mark + 1 >= len(phi) else [])
    layers[mark + 1] = (0,) + above
    return tuple(layers)


def counit_maps(target: MarkedTree, steps: int) -> LayerMaps:
    """ε : L^steps R^steps Y -> Y。新しい鎖を Y の最左枝へ潰す"""
    counts = target.counts()
    low = target.mark - steps
    return tuple((0,) + tuple(range(c)) if low < h <= target.mark else tuple(range(c))
                 for h, c in enumerate(counts))


def transpose_maps(alpha: LayerMaps, source: MarkedTree, steps: int) -> LayerMaps:
    """L^steps X -> Y の射を X -> R^steps Y へ移す（X の高さ (k, k+steps] を一つずらす）"""
    counts = source.counts()
    k = source.mark
    return tuple(tuple(alpha[h][i + 1] for i in range(c)) if k < h <= k + steps else alpha[h][:c]
                 for h, c in enumerate(counts))


def is_natural(source: MarkedTree, target: MarkedTree, maps: LayerMaps) -> bool:
    """maps が印を保つ自然変換か"""
    sc, tc = source.counts(), target.counts()
    sp, tp = source.tree.parents(), target.tree.parents()
    if len(maps) != len(sc) or source.mark != target.mark:
        return False
    for h, layer in enumerate(maps):
        if len(layer) != sc[h] or any(not 0 <= v < (tc[h] if h < len(tc) else 0) for v in layer):
            return False
        if any(a > b for a, b in zip(layer, layer[1:])):
            return False
        if h <= source.mark and layer and layer[0] != 0:
            return False
        if h > 0 and any(tp[h - 1][v] != maps[h - 1][sp[h - 1][i]] for i, v in enumerate(layer)):
            return False
    return True


def _extensions(sc, sp, tc, tp, mark: int, h: int, prefix: LayerMaps) -> Iterator[LayerMaps]:
    if h == len(sc):
        yield prefix
        return
    if h >= len(tc):
        return
    below = prefix[h - 1]
    choices = [[u for u in range(tc[h]) if tp[h - 1][u] == below[sp[h - 1][i]]] for i in range(sc[h])]
    if h <= mark and choices:
        choices[0] = [u for u in choices[0] if u == 0]
    for layer in _monotone_choices(choices):
        yield from _extensions(sc, sp, tc, tp, mark, h + 1, prefix + (layer,))


def natural_transformations(source: MarkedTree, target: MarkedTree) -> List[LayerMaps]:
    """印を保つ自然変換 source -> target を総当たりで列挙する"""
    if source.mark != target.mark:
        return []
    sc, tc = source.counts(), target.counts()
    sp, tp = source.tree.parents(), target.tree.parents()
    found = list(_extensions(sc, sp, tc, tp, source.mark, 1, ((0,),)))
    logger.debug("natural transformations: %d", len(found))
    return found
