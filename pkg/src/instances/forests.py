"""
両単体的な論理式・増加二分森・非交差分割

閉じた両単体的論理式は ⟨n⟩ から ⟨0⟩ への歩道で、各 ⟨m+1⟩ で
σ_i^m に沿った push（二分節点 m が i, i+1 本目の辺を結ぶ）か
δ_i^m に沿った pull（根節点 m が i 本目の辺を閉じる）を選ぶ。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from base.category import Arrow
from base.errors import IllFormed

from core.fibration import FreeBifibration
from core.formula import Formula, atom_of, connectives

logger = logging.getLogger(__name__)

BINARY = 'binary'
ROOT = 'root'

# χ = 3 の七つの類の代表（厳密交代形）
F03_LABELS: Dict[str, str] = {
    'A': '(pull map:>3 (atom 3))',
    'B': '(pull map:>2 (push s0^2 (atom 3)))',
    'C': '(pull map:>2 (push s1^2 (atom 3)))',
    'D': '(pull d0^0 (push s0^1 (pull d0^2 (atom 3))))',
    'E': '(pull d0^0 (push map:0,0,0>1 (atom 3)))',
    'F': '(pull d0^0 (push s0^1 (pull d1^2 (atom 3))))',
    'G': '(pull d0^0 (push s0^1 (pull d2^2 (atom 3))))',
}
F03_COVERS = (('A', 'D'), ('A', 'F'), ('A', 'G'), ('D', 'C'), ('G', 'B'), ('F', 'E'), ('C', 'E'), ('B', 'E'))


@dataclass(frozen=True)
class ForestNode:
    label: int
    kind: str
    edge: int


@dataclass(frozen=True)
class IncreasingBinaryForest:
    """nodes は作成順（ラベルは減少していく）"""
    leaves: int
    nodes: Tuple[ForestNode, ...] = ()

    @property
    def open_edges(self) -> int:
        return self.leaves - len(self.nodes)

    def to_dict(self) -> dict:
        return {
            'leaves': self.leaves,
            'nodes': [{'label': n.label, 'kind': n.kind, 'edge': n.edge} for n in self.nodes],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'IncreasingBinaryForest':
        return cls(data['leaves'], tuple(ForestNode(n['label'], n['kind'], n['edge']) for n in data['nodes']))


@dataclass(frozen=True)
class NoncrossingPartition:
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return sum(len(b) for b in self.blocks)

    def refines(self, other: 'NoncrossingPartition') -> bool:
        """各ブロックが other のどれかのブロックに含まれる"""
        return all(any(set(b) <= set(c) for c in other.blocks) for b in self.blocks)

    def to_list(self) -> List[List[int]]:
        return [list(b) for b in self.blocks]

    def __str__(self):
        return '|'.join(''.join(str(x) for x in b) for b in self.blocks) or '∅'


def partition(blocks) -> NoncrossingPartition:
    return NoncrossingPartition(tuple(sorted(tuple(sorted(b)) for b in blocks if b)))


def is_noncrossing(blocks) -> bool:
    """a < b < c < d で a, c と b, d が別々のブロックに同居しない"""
    owner = {x: i for i, b in enumerate(blocks) for x in b}
    items = sorted(owner)
    for a in items:
        for b in items:
            if b <= a:
                continue
            for c in items:
                if c <= b or owner[c] != owner[a] or owner[b] == owner[a]:
                    continue
                if any(d > c and owner[d] == owner[b] for d in items):
                    return False
    return True


# --- 閉じた論理式 ---

def closed_formulas(fib: FreeBifibration, n: int, k: int = 0) -> Iterator[Formula]:
    """
    ⟨n⟩ から ⟨k⟩ まで生成子で下りる論理式（χ = n, ⟨k⟩ 上）

    各 ⟨m⟩ で δ の pull を先に、σ の push を後に並べる。
    """
    simplex = fib.base

    def descend(S: Formula, m: int) -> Iterator[Formula]:
        if m == k:
            yield S
            return
        for i in range(m):
            yield from descend(fib.pull(simplex.delta(i, m - 1), S), m - 1)
        for i in range(m - 1):
            yield from descend(fib.push(simplex.sigma(i, m - 1), S), m - 1)

    yield from descend(fib.atom(n), n)


def _generator(arrow: Arrow, kind: str) -> Tuple[int, int]:
    images = arrow.payload
    if kind == 'push' and arrow.dom == arrow.cod + 1 and set(images) == set(range(arrow.cod)):
        return arrow.cod, next(i for i in range(len(images) - 1) if images[i] == images[i + 1])
    if kind == 'pull' and arrow.cod == arrow.dom + 1 and len(set(images)) == len(images):
        return arrow.dom, next(i for i in range(arrow.cod) if i not in images)
    raise IllFormed(
        "生成子に沿った結合子ではありません",
        f"{kind} の射 {arrow!r} が σ_i^m / δ_i^m のどちらでもありません",
        "厳密化する前の論理式を渡してください",
    )


def forest_of_formula(S: Formula) -> IncreasingBinaryForest:
    """両単体的論理式を増加二分森に読む（最内の結合子から節点を足す）"""
    nodes = []
    for kind, arrow in reversed(connectives(S)):
        label, edge = _generator(arrow, kind)
        nodes.append(ForestNode(label, BINARY if kind == 'push' else ROOT, edge))
    return IncreasingBinaryForest(atom_of(S).obj, tuple(nodes))


def formula_of_forest(fib: FreeBifibration, forest: IncreasingBinaryForest) -> Formula:
    S: Formula = fib.atom(forest.leaves)
    for node in forest.nodes:
        if node.kind == BINARY:
            S = fib.push(fib.base.sigma(node.edge, node.label), S)
        else:
            S = fib.pull(fib.base.delta(node.edge, node.label), S)
    return S


def noncrossing_of(forest: IncreasingBinaryForest) -> NoncrossingPartition:
    """連結成分ごとの葉の集合"""
    edges: List[set] = [{leaf} for leaf in range(forest.leaves)]
    closed: List[set] = []
    for node in forest.nodes:
        if node.kind == BINARY:
            edges[node.edge:node.edge + 2] = [edges[node.edge] | edges[node.edge + 1]]
        else:
            closed.append(edges.pop(node.edge))
    return partition(closed + edges)


# --- 非交差分割（総当たり） ---

def _set_partitions(items: List[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def noncrossing_partitions(n: int) -> List[NoncrossingPartition]:
    """NC(n) を集合分割の総当たりで列挙する"""
    found = {partition(p) for p in _set_partitions(list(range(n))) if is_noncrossing(p)}
    return sorted(found, key=lambda p: p.blocks)


def kreweras_interval_count(n: int) -> int:
    """NC(n) の細分順序で x ≤ y となる組の数"""
    elements = noncrossing_partitions(n)
    return sum(1 for x in elements for y in elements if x.refines(y))


def double_factorial(n: int) -> int:
    """(2n-1)!!"""
    result = 1
    for odd in range(1, 2 * n, 2):
        result *= odd
    return result
