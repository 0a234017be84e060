"""
性質テスト用のランダム導出生成

公理から始めて、その場で適用可能な規則を乱数で選んで積み上げる。
生成物は常に妥当な導出になる。
"""

import logging
import random
from typing import List, Optional

from base.backends import FreeCat
from base.category import Arrow

from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult, identity
from .fibration import FreeBifibration

logger = logging.getLogger(__name__)


def _short(fib: FreeBifibration, arrows: List[Arrow], max_word: int) -> List[Arrow]:
    """自由圏では語長で候補を絞る"""
    if not isinstance(fib.base, FreeCat):
        return arrows
    return [a for a in arrows if len(a.payload) <= max_word]


def random_axiom(fib: FreeBifibration, rng: random.Random) -> AtomAx:
    candidates = []
    for x in fib.domain.objects():
        for y in fib.domain.objects():
            candidates.extend(fib.domain.hom(x, y))
    if isinstance(fib.domain, FreeCat):
        candidates = [a for a in candidates if len(a.payload) <= 2] or candidates
    return AtomAx(rng.choice(candidates))


def random_step(fib: FreeBifibration, d: Derivation, rng: random.Random,
                max_word: int = 2) -> Optional[Derivation]:
    """d の下に規則を一つ足す。適用可能な規則がなければ None"""
    judgment = fib.judgment(d)
    base = fib.base
    options = []
    for f in _short(fib, fib.push_class.out_of(base, judgment.rhs.ref), max_word):
        options.append(RMult(d, f))
    for g in _short(fib, fib.pull_class.into(base, judgment.lhs.ref), max_word):
        options.append(LMult(g, d))
    for f in _short(fib, fib.push_class.out_of(base, judgment.lhs.ref), max_word):
        for g in base.left_divisors(f, judgment.base):
            options.append(LDiv(f, g, d))
    for g in _short(fib, fib.pull_class.into(base, judgment.rhs.ref), max_word):
        for f in base.right_divisors(judgment.base, g):
            options.append(RDiv(d, f, g))
    if not options:
        return None
    return rng.choice(options)


def random_derivation(fib: FreeBifibration, rng: random.Random, depth: int = 4,
                      start: Optional[Derivation] = None) -> Derivation:
    """高々 depth 個の規則を持つランダムな導出"""
    d = start if start is not None else random_axiom(fib, rng)
    for _ in range(rng.randint(0, depth)):
        nxt = random_step(fib, d, rng)
        if nxt is None:
            break
        d = nxt
    return d


def random_extension(fib: FreeBifibration, rng: random.Random, S, depth: int = 3) -> Derivation:
    """S の恒等導出に右規則だけを積み、左辺が S のままの導出を作る"""
    b = identity(fib, S)
    for _ in range(rng.randint(0, depth)):
        candidates = []
        judgment = fib.judgment(b)
        for f in _short(fib, fib.push_class.out_of(fib.base, judgment.rhs.ref), 2):
            candidates.append(RMult(b, f))
        for g in _short(fib, fib.pull_class.into(fib.base, judgment.rhs.ref), 2):
            for f in fib.base.right_divisors(judgment.base, g):
                candidates.append(RDiv(b, f, g))
        if not candidates:
            break
        b = rng.choice(candidates)
    return b


def random_composable_pair(fib: FreeBifibration, rng: random.Random, depth: int = 3):
    """カット可能な導出の組 (α, β)"""
    a = random_derivation(fib, rng, depth)
    return a, random_extension(fib, rng, fib.judgment(a).rhs, depth)
