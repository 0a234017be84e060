"""
カットなし導出の網羅的列挙（焦点化なし）

部分論理式性により有限。置換同値類の BFS 数え上げの土台になる。
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from base.category import Arrow

from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from .fibration import FreeBifibration
from .formula import Atom, Formula, Pull, Push
from .permeq import DEFAULT_BUDGET, permeq_class

logger = logging.getLogger(__name__)


def derivations(fib: FreeBifibration, S: Formula, f: Arrow, T: Formula) -> List[Derivation]:
    """S ⊢_f T のカットなし導出をすべて列挙する"""

    @lru_cache(maxsize=None)
    def search(lhs: Formula, base: Arrow, rhs: Formula) -> Tuple[Derivation, ...]:
        found: List[Derivation] = []
        if isinstance(lhs, Atom) and isinstance(rhs, Atom):
            found.extend(AtomAx(delta) for delta in fib.axioms(lhs.obj, rhs.obj, base))
        if isinstance(lhs, Push):
            if lhs.arrow.cod == base.dom:
                for alpha in search(lhs.body, fib.compose(lhs.arrow, base), rhs):
                    found.append(LDiv(lhs.arrow, base, alpha))
        elif isinstance(lhs, Pull):
            for rest in fib.base.left_divisors(lhs.arrow, base):
                for alpha in search(lhs.body, rest, rhs):
                    found.append(LMult(lhs.arrow, alpha))
        if isinstance(rhs, Push):
            for rest in fib.base.right_divisors(base, rhs.arrow):
                for alpha in search(lhs, rest, rhs.body):
                    found.append(RMult(alpha, rhs.arrow))
        elif isinstance(rhs, Pull):
            if base.cod == rhs.arrow.dom:
                for alpha in search(lhs, fib.compose(base, rhs.arrow), rhs.body):
                    found.append(RDiv(alpha, base, rhs.arrow))
        return tuple(found)

    result = list(search(S, f, T))
    logger.debug("enumerated %d cut-free derivations", len(result))
    return result


def permeq_classes(fib: FreeBifibration, S: Formula, f: Arrow, T: Formula,
                   budget: int = DEFAULT_BUDGET) -> List[List[Derivation]]:
    """S ⊢_f T の導出を置換同値類に分割する（列挙順に代表を先頭に置く）"""
    remaining = derivations(fib, S, f, T)
    assigned = set()
    classes: List[List[Derivation]] = []
    for d in remaining:
        if d in assigned:
            continue
        members = permeq_class(fib, d, budget)
        assigned.update(members)
        classes.append(members)
    return classes


def count_permeq_classes(fib: FreeBifibration, S: Formula, f: Arrow, T: Formula,
                         budget: int = DEFAULT_BUDGET) -> int:
    return len(permeq_classes(fib, S, f, T, budget))
