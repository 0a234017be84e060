"""
置換同値（permutation equivalence）

四つの生成等式を両方向に、任意の部分項位置で一回適用した
隣接導出を列挙し、幅優先探索で同値類を辿る。
逆方向の生成等式 2・3 はフィラー問い合わせで分解を探す。
"""

import logging
from collections import deque
from typing import List, Set

from base.errors import BudgetExceeded, NonComposable

from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult, with_body
from .fibration import FreeBifibration

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 100000


def _root_neighbors(fib: FreeBifibration, d: Derivation) -> List[Derivation]:
    base = fib.base
    found: List[Derivation] = []

    # (1) (g_·α)·f^ ↔ g_·(α·f^)
    if isinstance(d, RMult) and isinstance(d.body, LMult):
        inner = d.body
        found.append(LMult(inner.g, RMult(inner.body, d.f)))
    if isinstance(d, LMult) and isinstance(d.body, RMult):
        inner = d.body
        found.append(RMult(LMult(d.g, inner.body), inner.f))

    # (2) (f\_g α)·h^ → f\_{gh}(α·h^)
    if isinstance(d, RMult) and isinstance(d.body, LDiv):
        inner = d.body
        found.append(LDiv(inner.f, base.compose(inner.g, d.f), RMult(inner.body, d.f)))
    if isinstance(d, LDiv) and isinstance(d.body, RMult):
        # f\_k(α·h^) → (f\_g α)·h^ for every filler g
        alpha, h = d.body.body, d.body.f
        m = fib.project(alpha)
        for g in base.fillers(d.f, m, d.g, h):
            found.append(RMult(LDiv(d.f, g, alpha), h))

    # (3) g_·(α/_f h) → (g_·α)/_{gf} h
    if isinstance(d, LMult) and isinstance(d.body, RDiv):
        inner = d.body
        found.append(RDiv(LMult(d.g, inner.body), base.compose(d.g, inner.f), inner.g))
    if isinstance(d, RDiv) and isinstance(d.body, LMult):
        # (g_·α)/_k h → g_·(α/_f h) for every filler f
        g, alpha = d.body.g, d.body.body
        m = fib.project(alpha)
        for f in base.fillers(g, d.f, m, d.g):
            found.append(LMult(g, RDiv(alpha, f, d.g)))

    # (4) f\_k(α/_{fk} h) ↔ (f\_{kh} α)/_k h
    if isinstance(d, LDiv) and isinstance(d.body, RDiv):
        inner = d.body
        found.append(RDiv(LDiv(d.f, base.compose(d.g, inner.g), inner.body), d.g, inner.g))
    if isinstance(d, RDiv) and isinstance(d.body, LDiv):
        inner = d.body
        found.append(LDiv(inner.f, d.f, RDiv(inner.body, base.compose(inner.f, d.f), d.g)))
    return found


def permeq_neighbors(fib: FreeBifibration, d: Derivation) -> List[Derivation]:
    """生成等式を一回適用して得られる導出（重複なし、発見順）"""
    result: List[Derivation] = []
    seen: Set[Derivation] = set()

    def add(candidate: Derivation):
        if candidate != d and candidate not in seen:
            seen.add(candidate)
            result.append(candidate)

    for candidate in _root_neighbors(fib, d):
        add(candidate)
    if not isinstance(d, AtomAx):
        for inner in permeq_neighbors(fib, d.body):
            add(with_body(d, inner))
    return result


def permeq_class(fib: FreeBifibration, d: Derivation, budget: int = DEFAULT_BUDGET) -> List[Derivation]:
    """
    d の置換同値類全体を BFS 順に返す

    Raises:
        BudgetExceeded: 類が budget 個を超えた場合
    """
    visited = {d}
    order = [d]
    queue = deque([d])
    while queue:
        current = queue.popleft()
        for neighbor in permeq_neighbors(fib, current):
            if neighbor in visited:
                continue
            if len(visited) >= budget:
                raise BudgetExceeded(
                    "置換同値類の探索が予算を超えました",
                    f"訪問ノード数が {budget} に達しました",
                    "BIFIB_BUDGET を増やすか FP な基底で正規形判定を使ってください",
                )
            visited.add(neighbor)
            order.append(neighbor)
            queue.append(neighbor)
    logger.debug("permeq class of size %d", len(order))
    return order


def permeq_decide_bfs(fib: FreeBifibration, a: Derivation, b: Derivation,
                      budget: int = DEFAULT_BUDGET) -> bool:
    """
    BFS による置換同値の判定

    Raises:
        NonComposable: 判断が異なる場合
        BudgetExceeded: b を見つける前に予算を使い切った場合
    """
    if fib.judgment(a) != fib.judgment(b):
        raise NonComposable(
            "異なる判断の導出は比較できません",
            f"{fib.judgment(a)} と {fib.judgment(b)} が一致しません",
            "同じ判断の導出の組を渡してください",
        )
    if a == b:
        return True
    visited = {a}
    queue = deque([a])
    while queue:
        current = queue.popleft()
        for neighbor in permeq_neighbors(fib, current):
            if neighbor == b:
                logger.debug("permeq BFS found target after %d nodes", len(visited))
                return True
            if neighbor in visited:
                continue
            if len(visited) >= budget:
                raise BudgetExceeded(
                    "置換同値の判定が予算を超えました",
                    f"{budget} ノードを訪問しても目標に到達しません",
                    "BIFIB_BUDGET を増やしてください",
                )
            visited.add(neighbor)
            queue.append(neighbor)
    return False

