"""
極大多重集中証明の探索

根から公理へ向かって判断 S ⊢_f^q T を分解する。状態 q は
反転前状態（⊥ / L / R）か集中前状態（⊥f / L[π,f] / R[f,ρ]）で、
直前のバイポールの情報から par/gra の redex を作る集中を禁じる。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

from base.category import Arrow
from base.errors import NonComposable, NotFP

from core.fibration import FreeBifibration
from core.formula import Atom, Formula, Pull, Push
from core.strictify import pull_block, push_block

from .multi import MAtom, MBiDiv, MBiMult, MLDiv, MLMult, MRDiv, MRMult, MultiDerivation

logger = logging.getLogger(__name__)

PRE_INVERSION = ('bot', 'L', 'R')
PRE_FOCUS = ('bot_f', 'L_f', 'R_f')


@dataclass(frozen=True)
class LockState:
    """
    kind が L_f のとき left = ⌊π⌋, arrow = f。R_f のとき arrow = f, right = ⌊ρ⌋。
    """
    kind: str = 'bot'
    left: Optional[Arrow] = None
    arrow: Optional[Arrow] = None
    right: Optional[Arrow] = None

    @property
    def is_pre_inversion(self) -> bool:
        return self.kind in PRE_INVERSION


UNLOCKED = LockState('bot')
BOT_F = LockState('bot_f')


def _after_inversion(fib: FreeBifibration, q: LockState, pi: Tuple, f: Arrow, rho: Tuple) -> LockState:
    if q.kind == 'L' and not rho:
        return LockState('L_f', left=fib.composite(pi, f.dom), arrow=f)
    if q.kind == 'R' and not pi:
        return LockState('R_f', arrow=f, right=fib.composite(rho, f.cod))
    return BOT_F


class MaxSearch:
    """一つのファイブレーション上の探索。結果は判断と状態ごとにメモ化する"""

    def __init__(self, fib: FreeBifibration):
        if not fib.is_fp():
            raise NotFP(
                "極大多重集中探索には FP な基底が必要です",
                f"{fib.base.name} は push/pull クラスについて FP と宣言されていません",
                "FP な基底を使うか BFS で数えてください",
            )
        self.fib = fib
        self._memo: Dict[Tuple, Tuple[MultiDerivation, ...]] = {}

    def search(self, S: Formula, f: Arrow, T: Formula, q: LockState = UNLOCKED) -> Tuple[MultiDerivation, ...]:
        key = (S, f, T, q)
        cached = self._memo.get(key)
        if cached is None:
            cached = tuple(self._inversion(S, f, T, q) if q.is_pre_inversion else self._focus(S, f, T, q))
            self._memo[key] = cached
        return cached

    def _inversion(self, S: Formula, f: Arrow, T: Formula, q: LockState) -> Iterator[MultiDerivation]:
        fib = self.fib
        pi, N = push_block(S) if isinstance(S, Push) else ([], S)
        rho, P = pull_block(T) if isinstance(T, Pull) else ([], T)
        pi, rho = tuple(pi), tuple(rho)
        base = f
        if pi:
            base = fib.compose(fib.composite(pi, pi[0].dom), base)
        if rho:
            base = fib.compose(base, fib.composite(rho, rho[0].dom))
        state = _after_inversion(fib, q, pi, f, rho)
        for premise in self.search(N, base, P, state):
            if pi and rho:
                yield MBiDiv(pi, f, premise, rho)
            elif pi:
                yield MLDiv(pi, f, premise)
            elif rho:
                yield MRDiv(premise, f, rho)
            else:
                yield premise

    def _focus(self, S: Formula, m: Arrow, T: Formula, q: LockState) -> Iterator[MultiDerivation]:
        fib = self.fib
        base = fib.base
        sigma = body_s = tau = body_t = None
        if isinstance(S, Pull):
            sigma, body_s = pull_block(S)
            sigma = tuple(sigma)
            sig = fib.composite(sigma, sigma[0].dom)
        if isinstance(T, Push):
            tau, body_t = push_block(T)
            tau = tuple(tau)
            ta = fib.composite(tau, tau[0].dom)

        # L 集中
        if sigma is not None:
            for g in base.left_divisors(sig, m):
                if q.kind == 'R_f' and base.le_fact(sig, g, q.arrow, q.right):
                    continue
                for premise in self.search(body_s, g, T, LockState('L')):
                    yield MLMult(sigma, premise)
        # R 集中
        if tau is not None:
            for g in base.right_divisors(m, ta):
                if q.kind == 'L_f' and base.le_fact(q.left, q.arrow, g, ta):
                    continue
                for premise in self.search(S, g, body_t, LockState('R')):
                    yield MRMult(premise, tau)
        # LR 集中
        if sigma is not None and tau is not None:
            for h in base.left_divisors(sig, m):
                for g in base.right_divisors(h, ta):
                    if q.kind == 'L_f' and base.le_fact(q.left, q.arrow, fib.compose(sig, g), ta):
                        continue
                    if q.kind == 'R_f' and base.le_fact(sig, fib.compose(g, ta), q.arrow, q.right):
                        continue
                    for premise in self.search(body_s, g, body_t, UNLOCKED):
                        yield MBiMult(sigma, premise, tau)
        # 公理
        if isinstance(S, Atom) and isinstance(T, Atom):
            for delta in fib.axioms(S.obj, T.obj, m):
                yield MAtom(delta)


def max_search(fib: FreeBifibration, S: Formula, f: Arrow, T: Formula,
               lock: LockState = UNLOCKED, searcher: Optional[MaxSearch] = None) -> Iterator[MultiDerivation]:
    """
    S ⊢_f^lock T の極大多重集中証明を標準順に重複なく列挙する

    Raises:
        NotFP: 基底が FP でない場合
        NonComposable: 両辺の載る対象が f と合わない場合
    """
    if S.ref != f.dom or T.ref != f.cod:
        raise NonComposable(
            "判断の両辺が基底の射と合いません",
            f"S は {S.ref!r}、T は {T.ref!r} 上ですが f は {f.dom!r} → {f.cod!r} です",
            "dom f 上の S と cod f 上の T を渡してください",
        )
    fib.check_formula(S)
    fib.check_formula(T)
    searcher = searcher or MaxSearch(fib)
    yield from searcher.search(S, f, T, lock)


def count_max(fib: FreeBifibration, S: Formula, f: Arrow, T: Formula) -> int:
    return sum(1 for _ in max_search(fib, S, f, T))
