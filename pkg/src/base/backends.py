"""
具体的な基底圏バックエンド

- FreeCat: グラフ上の自由圏（射は生成子の語）
- FinPoset: 有限前順序（各 hom は高々1本）
- SimplexCat: 有限順序数と単調写像（像のタプルで外延的に表現）
- MonoidNat: 自然数の加法モノイド（対象1つ）
- DiscreteCat / DiscreteNat: 恒等射のみ
"""

import itertools
import logging
import re
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .category import ALL, Arrow, ArrowClass, CategoryBackend, sort_arrows
from .errors import PresentationError

logger = logging.getLogger(__name__)


class FreeCat(CategoryBackend):
    """有向グラフから生成される自由圏"""

    name = 'free'
    locally_finite = True

    def __init__(self, objects: Sequence[Any], edges: Dict[str, Tuple[Any, Any]], max_word: int = 8):
        super().__init__()
        self._objects = list(objects)
        self.edges = dict(edges)
        self.max_word = max_word
        for label, (src, tgt) in self.edges.items():
            if src not in self._objects or tgt not in self._objects:
                raise PresentationError(
                    f"辺 {label} の端点が対象にありません",
                    f"{src!r} -> {tgt!r} が objects に含まれていません",
                    "objects 行に端点を追加してください",
                )
        # 自由圏は単射・全射のみなので FP
        self._fp['all'] = True

    def objects(self) -> List[Any]:
        return list(self._objects)

    def identity(self, x: Any) -> Arrow:
        return Arrow(x, x, ())

    def _compose(self, a: Arrow, b: Arrow) -> Arrow:
        return Arrow(a.dom, b.cod, a.payload + b.payload)

    def generators(self) -> List[Arrow]:
        return sort_arrows(Arrow(s, t, (label,)) for label, (s, t) in self.edges.items())

    def hom(self, x: Any, y: Any) -> List[Arrow]:
        found = []
        frontier = [self.identity(x)]
        for _ in range(self.max_word + 1):
            found.extend(a for a in frontier if a.cod == y)
            frontier = [self._compose(a, g) for a in frontier for g in self.generators() if g.dom == a.cod]
        return sort_arrows(found)

    def left_divisors(self, a: Arrow, h: Arrow) -> List[Arrow]:
        n = len(a.payload)
        if a.dom != h.dom or h.payload[:n] != a.payload:
            return []
        return [Arrow(a.cod, h.cod, h.payload[n:])]

    def right_divisors(self, h: Arrow, b: Arrow) -> List[Arrow]:
        n = len(b.payload)
        if b.cod != h.cod or len(h.payload) < n or h.payload[len(h.payload) - n:] != b.payload:
            return []
        return [Arrow(h.dom, b.dom, h.payload[:len(h.payload) - n])]

    def show(self, a: Arrow) -> str:
        if not a.payload:
            return f"id:{a.dom}"
        return '.'.join(a.payload)

    def _parse_simple(self, token: str) -> Arrow:
        if token in self.edges:
            src, tgt = self.edges[token]
            return Arrow(src, tgt, (token,))
        return super()._parse_simple(token)


class FinPoset(CategoryBackend):
    """有限前順序を薄い圏とみなしたもの"""

    name = 'poset'
    locally_finite = True

    def __init__(self, objects: Sequence[Any], relation: Iterable[Tuple[Any, Any]],
                 names: Optional[Dict[str, Tuple[Any, Any]]] = None):
        super().__init__()
        self._objects = list(objects)
        graph = nx.DiGraph()
        graph.add_nodes_from(self._objects)
        graph.add_edges_from(relation)
        self.closure = nx.transitive_closure(graph, reflexive=True)
        self.names = dict(names or {})
        self._by_pair = {pair: label for label, pair in self.names.items()}
        for label, (src, tgt) in self.names.items():
            if not self.le(src, tgt):
                raise PresentationError(
                    f"名前付き射 {label} が順序関係にありません",
                    f"{src!r} <= {tgt!r} が成り立ちません",
                    "関係行を追加するか名前を削除してください",
                )
        self._fp['all'] = True

    def le(self, x: Any, y: Any) -> bool:
        return self.closure.has_edge(x, y)

    def objects(self) -> List[Any]:
        return list(self._objects)

    def identity(self, x: Any) -> Arrow:
        return Arrow(x, x, ())

    def _compose(self, a: Arrow, b: Arrow) -> Arrow:
        return Arrow(a.dom, b.cod, ())

    def generators(self) -> List[Arrow]:
        return sort_arrows(Arrow(s, t, ()) for s, t in self._by_pair)

    def hom(self, x: Any, y: Any) -> List[Arrow]:
        return [Arrow(x, y, ())] if self.le(x, y) else []

    def left_divisors(self, a: Arrow, h: Arrow) -> List[Arrow]:
        if a.dom != h.dom:
            return []
        return self.hom(a.cod, h.cod)

    def right_divisors(self, h: Arrow, b: Arrow) -> List[Arrow]:
        if b.cod != h.cod:
            return []
        return self.hom(h.dom, b.dom)

    def show(self, a: Arrow) -> str:
        if (a.dom, a.cod) in self._by_pair:
            return self._by_pair[(a.dom, a.cod)]
        if a.dom == a.cod:
            return f"id:{a.dom}"
        return f"{a.dom}<={a.cod}"

    def _parse_simple(self, token: str) -> Arrow:
        if token in self.names:
            src, tgt = self.names[token]
            return Arrow(src, tgt, ())
        if '<=' in token:
            left, right = token.split('<=', 1)
            x, y = self.parse_object(left), self.parse_object(right)
            if self.le(x, y):
                return Arrow(x, y, ())
        return super()._parse_simple(token)


def interval() -> FinPoset:
    """区間圏 ⟨2⟩ = {0 -f-> 1}"""
    poset = FinPoset([0, 1], [(0, 1)], {'f': (0, 1)})
    poset.name = 'interval'
    return poset


def omega_chain(level: int) -> FinPoset:
    """順序数 ω を level で打ち切った鎖。生成子 f_i : i -> i+1"""
    poset = FinPoset(list(range(level + 1)), [(i, i + 1) for i in range(level)],
                     {f"f_{i}": (i, i + 1) for i in range(level)})
    poset.name = f'omega({level})'
    return poset


_SIGMA = re.compile(r'^s(\d+)\^(\d+)$')
_DELTA = re.compile(r'^d(\d+)\^(\d+)$')
_MAP = re.compile(r'^map:([\d,]*)>(\d+)$')


class SimplexCat(CategoryBackend):
    """
    単体圏 Δ（有限順序数 ⟨0⟩..⟨max_n⟩ と単調写像）

    射の payload は像のタプル。σ_i^n, δ_i^n は派生コンストラクタ。
    """

    name = 'simplex'
    locally_finite = True

    def __init__(self, max_n: int):
        super().__init__()
        self.max_n = max_n
        self._classes['epi'] = ArrowClass('epi', lambda a: set(a.payload) == set(range(a.cod)))
        self._classes['mono'] = ArrowClass('mono', lambda a: len(set(a.payload)) == len(a.payload))
        self._fp.update({'epi': True, 'mono': True, 'all': False})

    def objects(self) -> List[int]:
        return list(range(self.max_n + 1))

    def has_object(self, x: Any) -> bool:
        return isinstance(x, int) and 0 <= x <= self.max_n

    def parse_object(self, token: str) -> int:
        if token.isdigit() and self.has_object(int(token)):
            return int(token)
        return super().parse_object(token)

    def identity(self, x: int) -> Arrow:
        return Arrow(x, x, tuple(range(x)))

    def _compose(self, a: Arrow, b: Arrow) -> Arrow:
        return Arrow(a.dom, b.cod, tuple(b.payload[i] for i in a.payload))

    def monotone(self, images: Sequence[int], cod: int) -> Arrow:
        images = tuple(images)
        if any(x > y for x, y in zip(images, images[1:])) or any(not 0 <= v < cod for v in images):
            raise PresentationError(
                "単調写像ではありません",
                f"像 {images} が ⟨{cod}⟩ への単調写像になっていません",
                "広義単調増加で値域内の像を指定してください",
            )
        return Arrow(len(images), cod, images)

    def sigma(self, i: int, n: int) -> Arrow:
        """σ_i^n : ⟨n+1⟩ -> ⟨n⟩（i と i+1 を潰す）"""
        if not 0 <= i < n or n + 1 > self.max_n:
            raise PresentationError(
                f"σ_{i}^{n} は定義されていません",
                f"0 <= i < n かつ n+1 <= {self.max_n} が必要です",
                "添字か打ち切りレベルを見直してください",
            )
        return Arrow(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 1)))

    def delta(self, i: int, n: int) -> Arrow:
        """δ_i^n : ⟨n⟩ -> ⟨n+1⟩（i を飛ばす）"""
        if not 0 <= i <= n or n + 1 > self.max_n:
            raise PresentationError(
                f"δ_{i}^{n} は定義されていません",
                f"0 <= i <= n かつ n+1 <= {self.max_n} が必要です",
                "添字か打ち切りレベルを見直してください",
            )
        return Arrow(n, n + 1, tuple(j if j < i else j + 1 for j in range(n)))

    def generators(self) -> List[Arrow]:
        gens = [self.sigma(i, n) for n in range(self.max_n) for i in range(n)]
        gens += [self.delta(i, n) for n in range(self.max_n) for i in range(n + 1)]
        return sort_arrows(gens)

    def hom(self, x: int, y: int) -> List[Arrow]:
        return [Arrow(x, y, images) for images in itertools.combinations_with_replacement(range(y), x)]

    def left_divisors(self, a: Arrow, h: Arrow) -> List[Arrow]:
        if a.dom != h.dom:
            return []
        fixed: List[Optional[int]] = [None] * a.cod
        for i, j in enumerate(a.payload):
            if fixed[j] is not None and fixed[j] != h.payload[i]:
                return []
            fixed[j] = h.payload[i]
        choices = [[v] if v is not None else list(range(h.cod)) for v in fixed]
        return [Arrow(a.cod, h.cod, images) for images in _monotone_choices(choices)]

    def right_divisors(self, h: Arrow, b: Arrow) -> List[Arrow]:
        if b.cod != h.cod:
            return []
        choices = [[j for j in range(b.dom) if b.payload[j] == v] for v in h.payload]
        return [Arrow(h.dom, b.dom, images) for images in _monotone_choices(choices)]

    def show(self, a: Arrow) -> str:
        images = a.payload
        if self.is_identity(a):
            return f"id:{a.dom}"
        if a.dom == a.cod + 1 and set(images) == set(range(a.cod)):
            i = next(k for k in range(len(images) - 1) if images[k] == images[k + 1])
            return f"s{i}^{a.cod}"
        if a.cod == a.dom + 1 and len(set(images)) == len(images):
            i = next(k for k in range(a.cod) if k not in images)
            return f"d{i}^{a.dom}"
        return f"map:{','.join(str(v) for v in images)}>{a.cod}"

    def _parse_simple(self, token: str) -> Arrow:
        match = _SIGMA.match(token)
        if match:
            return self.sigma(int(match.group(1)), int(match.group(2)))
        match = _DELTA.match(token)
        if match:
            return self.delta(int(match.group(1)), int(match.group(2)))
        match = _MAP.match(token)
        if match:
            images = [int(v) for v in match.group(1).split(',') if v != '']
            return self.monotone(images, int(match.group(2)))
        return super()._parse_simple(token)


def _monotone_choices(choices: List[List[int]]):
    """各位置の候補から広義単調な列を辞書順に列挙"""
    def backtrack(i: int, lower: int, prefix: Tuple[int, ...]):
        if i == len(choices):
            yield prefix
            return
        for v in choices[i]:
            if v >= lower:
                yield from backtrack(i + 1, v, prefix + (v,))
    yield from backtrack(0, 0, ())


class MonoidNat(CategoryBackend):
    """自然数の加法モノイド B(ℕ)。対象は 0 のみ"""

    name = 'monoid-nat'
    locally_finite = True

    def __init__(self, max_value: int = 16):
        super().__init__()
        self.max_value = max_value
        self._fp['all'] = True

    def objects(self) -> List[int]:
        return [0]

    def parse_object(self, token: str) -> int:
        if token in ('0', '*'):
            return 0
        return super().parse_object(token)

    def identity(self, x: int) -> Arrow:
        return Arrow(0, 0, (0,))

    def arrow(self, n: int) -> Arrow:
        return Arrow(0, 0, (n,))

    def _compose(self, a: Arrow, b: Arrow) -> Arrow:
        return Arrow(0, 0, (a.payload[0] + b.payload[0],))

    def generators(self) -> List[Arrow]:
        return [self.arrow(1)]

    def hom(self, x: int, y: int) -> List[Arrow]:
        return [self.arrow(n) for n in range(self.max_value + 1)]

    def left_divisors(self, a: Arrow, h: Arrow) -> List[Arrow]:
        rest = h.payload[0] - a.payload[0]
        return [self.arrow(rest)] if rest >= 0 else []

    def right_divisors(self, h: Arrow, b: Arrow) -> List[Arrow]:
        return self.left_divisors(b, h)

    def show(self, a: Arrow) -> str:
        return str(a.payload[0])

    def _parse_simple(self, token: str) -> Arrow:
        if token == 'f':
            return self.arrow(1)
        if token.isdigit():
            return self.arrow(int(token))
        return super()._parse_simple(token)


class DiscreteCat(CategoryBackend):
    """恒等射のみの離散圏（終対象圏 1 も含む）"""

    name = 'discrete'
    locally_finite = True

    def __init__(self, objects: Sequence[Any]):
        super().__init__()
        self._objects = list(objects)
        self._fp['all'] = True

    def objects(self) -> List[Any]:
        return list(self._objects)

    def identity(self, x: Any) -> Arrow:
        return Arrow(x, x, ())

    def _compose(self, a: Arrow, b: Arrow) -> Arrow:
        return a

    def hom(self, x: Any, y: Any) -> List[Arrow]:
        return [self.identity(x)] if x == y else []

    def left_divisors(self, a: Arrow, h: Arrow) -> List[Arrow]:
        return [self.identity(a.cod)] if a == h else []

    def right_divisors(self, h: Arrow, b: Arrow) -> List[Arrow]:
        return [self.identity(h.dom)] if h == b else []

    def show(self, a: Arrow) -> str:
        return f"id:{a.dom}"


class DiscreteNat(DiscreteCat):
    """対象 0..max_n の離散圏"""

    name = 'discrete-nat'

    def __init__(self, max_n: int):
        super().__init__(list(range(max_n + 1)))
        self.max_n = max_n

    def has_object(self, x: Any) -> bool:
        return isinstance(x, int) and 0 <= x <= self.max_n

    def parse_object(self, token: str) -> int:
        if token.isdigit() and self.has_object(int(token)):
            return int(token)
        return super().parse_object(token)


def point() -> DiscreteCat:
    """終対象圏 1（唯一の対象 '*'）"""
    return DiscreteCat(['*'])
