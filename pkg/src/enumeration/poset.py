"""
ファイバー半順序 F_{k,n} とその解析

両単体的ファイバーの ⟨n⟩ から ⟨k⟩ へ下りる論理式を厳密化で類別し、
恒等射上の含意（極大証明が一つでもあるか）で前順序を作る。
相互含意は networkx の凝縮で潰し、Hasse 図は推移的簡約で求める。
"""

import io
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from base.errors import IllFormed, PresentationError

from core.fibration import FreeBifibration
from core.formula import Formula
from core.sexpr import show_formula
from core.strictify import strictify_formula
from focusing.maxsearch import MaxSearch, max_search
from instances.forests import F03_LABELS, closed_formulas, forest_of_formula, noncrossing_of
from instances.seeds import ambisimplex

logger = logging.getLogger(__name__)

KIND_AMBISIMPLICIAL = 'ambisimplicial'


@dataclass
class FiberPoset:
    """
    有限半順序

    order[i, j] は elements[i] ≤ elements[j]（i の論理式が j を恒等射上で含意する）。
    covers は Hasse 図の辺 (下, 上)。
    """
    fib: FreeBifibration = field(repr=False, compare=False)
    kind: str
    k: int
    n: int
    elements: List[Formula]
    members: List[List[Formula]]
    labels: List[str]
    order: np.ndarray
    covers: List[Tuple[int, int]]

    def __len__(self):
        return len(self.elements)

    @property
    def title(self) -> str:
        prefix = 'K' if self.kind.endswith('/bc') else 'F'
        return f"{prefix}_{{{self.k},{self.n}}}"

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def leq(self, a: str, b: str) -> bool:
        return bool(self.order[self.index(a), self.index(b)])

    def labelled_covers(self) -> List[Tuple[str, str]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.covers]


@dataclass
class PosetReport:
    size: int
    is_lattice: bool
    interval_count: int
    failing_pair: Optional[Tuple[str, str]] = None
    missing: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            'size': self.size,
            'is_lattice': self.is_lattice,
            'interval_count': self.interval_count,
            'failing_pair': list(self.failing_pair) if self.failing_pair else None,
            'missing': self.missing,
        }


def _show(fib: FreeBifibration, S: Formula) -> str:
    return show_formula(fib, S)


def _condense(size: int, edges: Iterable[Tuple[int, int]]) -> Tuple[List[List[int]], np.ndarray, List[Tuple[int, int]]]:
    """
    前順序を半順序に潰す

    Returns:
        (各元に属する元の添字, 順序行列, 被覆) ただし元は最小の添字順に並べる
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from((a, b) for a, b in edges if a != b)
    dag = nx.condensation(graph)
    groups = sorted(sorted(dag.nodes[c]['members']) for c in dag.nodes)
    position = {c: groups.index(sorted(dag.nodes[c]['members'])) for c in dag.nodes}
    closure = nx.transitive_closure_dag(dag)
    order = np.eye(len(groups), dtype=bool)
    for a, b in closure.edges:
        order[position[a], position[b]] = True
    covers = sorted((position[a], position[b]) for a, b in nx.transitive_reduction(dag).edges)
    return groups, order, covers


def _entails(searcher: MaxSearch, fib: FreeBifibration, S: Formula, T: Formula) -> bool:
    identity = fib.base.identity(S.ref)
    return next(iter(max_search(fib, S, identity, T, searcher=searcher)), None) is not None


def _labels(fib: FreeBifibration, k: int, n: int, groups: Sequence[Sequence[Formula]]) -> List[str]:
    if (k, n) != (0, 3):
        return [f"e{i}" for i in range(len(groups))]
    names = {text: name for name, text in F03_LABELS.items()}
    labels = []
    for i, group in enumerate(groups):
        found = sorted(names[_show(fib, S)] for S in group if _show(fib, S) in names)
        labels.append(found[0] if found else f"e{i}")
    return labels


def fiber_poset(kind: str = KIND_AMBISIMPLICIAL, k: int = 0, n: int = 3, level: Optional[int] = None,
                fib: Optional[FreeBifibration] = None) -> FiberPoset:
    """
    F_{k,n}：χ = n の両単体的論理式の ⟨k⟩ 上の含意順序

    Raises:
        PresentationError: 未知の種類の場合
        IllFormed: k, n が打ち切りレベルの外にある場合
    """
    if kind != KIND_AMBISIMPLICIAL:
        raise PresentationError(
            f"未知のファイバー半順序 {kind!r} です",
            f"対応しているのは {KIND_AMBISIMPLICIAL!r} だけです",
            "--kind を省略するか ambisimplicial を指定してください",
        )
    level = level if level is not None else n
    if not 0 <= k <= n <= level:
        raise IllFormed(
            f"F_{{{k},{n}}} は作れません",
            f"0 ≤ k ≤ n ≤ level（level = {level}）を満たしていません",
            "k, n を打ち切りレベル以下の範囲で指定してください",
        )
    fib = fib or ambisimplex(level)

    classes: Dict[Formula, List[Formula]] = {}
    for S in closed_formulas(fib, n, k):
        classes.setdefault(strictify_formula(fib, S), []).append(S)
    keys = sorted(classes, key=lambda S: _show(fib, S))
    logger.debug("F_{%d,%d}: %d formulas, %d strict forms",
                 k, n, sum(len(v) for v in classes.values()), len(keys))

    searcher = MaxSearch(fib)
    edges = [(i, j) for i, S in enumerate(keys) for j, T in enumerate(keys)
             if i != j and _entails(searcher, fib, S, T)]
    groups, order, covers = _condense(len(keys), edges)

    elements = [keys[g[0]] for g in groups]
    members = [[S for i in g for S in classes[keys[i]]] for g in groups]
    labels = _labels(fib, k, n, [[keys[i] for i in g] for g in groups])
    logger.debug("F_{%d,%d}: %d elements, %d covers", k, n, len(elements), len(covers))
    return FiberPoset(fib, kind, k, n, elements, members, labels, order, covers)


def poset_analyze(p: FiberPoset) -> PosetReport:
    """交わり・結びの存在を総当たりで調べ、区間 x ≤ y の数を数える"""
    order = p.order
    size = len(p)
    intervals = int(order.sum())
    if size == 0:
        return PosetReport(0, False, 0)
    for i in range(size):
        for j in range(i + 1, size):
            upper = np.flatnonzero(order[i] & order[j])
            if not any(order[u, upper].all() for u in upper):
                return PosetReport(size, False, intervals, (p.labels[i], p.labels[j]), 'join')
            lower = np.flatnonzero(order[:, i] & order[:, j])
            if not any(order[lower, l].all() for l in lower):
                return PosetReport(size, False, intervals, (p.labels[i], p.labels[j]), 'meet')
    return PosetReport(size, True, intervals)


def bc_quotient(p: FiberPoset) -> FiberPoset:
    """
    Beck-Chevalley 商：森を連結成分（非交差分割）に忘れて元を同一視する

    Raises:
        IllFormed: 両単体的な F_{0,n} 以外を渡した場合
    """
    if p.kind != KIND_AMBISIMPLICIAL or p.k != 0:
        raise IllFormed(
            f"{p.title} の商は取れません",
            "非交差分割への写像は閉じた両単体的論理式にだけ定義されています",
            "fiber_poset(k=0) の結果を渡してください",
        )
    partitions = [{noncrossing_of(forest_of_formula(S)) for S in group} for group in p.members]
    merge = UnionFind(range(len(p)))
    owner = {}
    for i, found in enumerate(partitions):
        for part in found:
            merge.union(i, owner.setdefault(part, i))
    blocks = sorted(sorted(block) for block in merge.to_sets())
    block_of = {i: b for b, block in enumerate(blocks) for i in block}

    edges = [(block_of[i], block_of[j]) for i, j in zip(*np.nonzero(p.order))]
    groups, order, covers = _condense(len(blocks), edges)

    merged = [[i for b in g for i in blocks[b]] for g in groups]
    elements = [min((p.elements[i] for i in g), key=lambda S: _show(p.fib, S)) for g in merged]
    members = [[S for i in g for S in p.members[i]] for g in merged]
    labels = ['~'.join(sorted({str(part) for i in g for part in partitions[i]})) for g in merged]
    logger.debug("%s/bc: %d elements", p.title, len(elements))
    return FiberPoset(p.fib, p.kind + '/bc', p.k, p.n, elements, members, labels, order, covers)


# --- 書き出し ---

def to_dot(p: FiberPoset) -> str:
    """Hasse 図（下から上へ）"""
    lines = [f'digraph "{p.title}" {{', '  rankdir=BT;']
    lines += [f'  "{label}";' for label in p.labels]
    lines += [f'  "{a}" -> "{b}";' for a, b in p.labelled_covers()]
    lines.append('}')
    return '\n'.join(lines) + '\n'


def to_csv(p: FiberPoset) -> str:
    """順序行列（行 ≤ 列 のとき 1）"""
    buffer = io.StringIO()
    np.savetxt(buffer, p.order.astype(int), fmt='%d', delimiter=',',
               header=','.join(p.labels), comments='')
    return buffer.getvalue()


def to_json(p: FiberPoset) -> str:
    data = {
        'poset': p.title,
        'kind': p.kind,
        'elements': [
            {
                'label': label,
                'formula': _show(p.fib, S),
                'members': [_show(p.fib, M) for M in group],
            }
            for label, S, group in zip(p.labels, p.elements, p.members)
        ],
        'covers': [list(c) for c in p.labelled_covers()],
    }
    return json.dumps(data, ensure_ascii=False, indent=2)


EXPORTERS = {'dot': to_dot, 'csv': to_csv, 'json': to_json}
