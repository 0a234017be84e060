"""
強化（strengthening）と逐次化（sequentialization）

strengthen は弱集中導出を強（単一）集中導出に写し、反転可能な規則を
先に（両側可能なら同時に）適用する。inv_seq と sequentialize は逆向き。
"""

import logging
from dataclasses import replace
from typing import List, Union

from base.errors import IllFormed

from core.cut import cut
from core.derivation import Derivation, cart, opcart
from core.fibration import FreeBifibration
from core.formula import Pull, Push
from core.strictify import pull_block, push_block, strictify_derivation, strictify_formula

from .multi import (
    MAtom, MBiDiv, MLDiv, MLMult, MRDiv, MRMult, MultiDerivation, infer_multi,
)
from .rewrite import Bipole, LRBipole, _seq_lr, _seq_rl, from_bipoles, to_bipoles
from .weak import (
    WAtom, WLDiv, WLMult, WRDiv, WRMult, WeakDerivation, ceil, floor, infer_weak, weak_preimage,
)

logger = logging.getLogger(__name__)

MODES = ('foc', 'inv', 'all')


def strengthen(fib: FreeBifibration, w: WeakDerivation) -> MultiDerivation:
    """
    弱集中導出の強化 S(α_w)

    非中立な判断では opcart·⌊α⌋·cart を作り直して両側を一度に反転し、
    中立な判断では集中規則をそのまま写す。結果は BiMult を使わない。
    """
    judgment = infer_weak(fib, w)
    S, T = judgment.lhs, judgment.rhs
    if isinstance(S, Push) or isinstance(T, Pull):
        pi, N = push_block(S) if isinstance(S, Push) else ([], S)
        rho, P = pull_block(T) if isinstance(T, Pull) else ([], T)
        strict = floor(fib, w)
        if pi:
            strict = cut(fib, opcart(fib, fib.composite(pi, pi[0].dom), strictify_formula(fib, N)), strict)
        if rho:
            strict = cut(fib, strict, cart(fib, fib.composite(rho, rho[0].dom), strictify_formula(fib, P)))
        inner = strengthen(fib, weak_preimage(fib, strict, N, P))
        f = judgment.base
        if pi and rho:
            return MBiDiv(tuple(pi), f, inner, tuple(rho))
        if pi:
            return MLDiv(tuple(pi), f, inner)
        return MRDiv(inner, f, tuple(rho))
    if isinstance(w, WLMult):
        return MLMult(w.sigma, strengthen(fib, w.body))
    if isinstance(w, WRMult):
        return MRMult(strengthen(fib, w.body), w.tau)
    return MAtom(w.delta)


def _linearize(fib: FreeBifibration, m: MultiDerivation, bidiv_both: bool,
               bimult_both: bool) -> List[WeakDerivation]:
    """BiDiv/BiMult の順序の選び方ごとに弱集中導出を並べる（左優先が先頭）"""
    if isinstance(m, MAtom):
        return [WAtom(m.delta)]
    results: List[WeakDerivation] = []
    for w in _linearize(fib, m.body, bidiv_both, bimult_both):
        if isinstance(m, MLDiv):
            results.append(WLDiv(m.pi, m.f, w))
        elif isinstance(m, MRDiv):
            results.append(WRDiv(w, m.f, m.rho))
        elif isinstance(m, MLMult):
            results.append(WLMult(m.sigma, w))
        elif isinstance(m, MRMult):
            results.append(WRMult(w, m.tau))
        elif isinstance(m, MBiDiv):
            pi_f = fib.compose(fib.composite(m.pi, m.pi[0].dom), m.f)
            results.append(WLDiv(m.pi, m.f, WRDiv(w, pi_f, m.rho)))
            if bidiv_both:
                f_rho = fib.compose(m.f, fib.composite(m.rho, m.rho[0].dom))
                results.append(WRDiv(WLDiv(m.pi, f_rho, w), m.f, m.rho))
        else:
            results.append(WLMult(m.sigma, WRMult(w, m.tau)))
            if bimult_both:
                results.append(WRMult(WLMult(m.sigma, w), m.tau))
    return results


def inv_seq(fib: FreeBifibration, m: MultiDerivation) -> WeakDerivation:
    """標準の（左優先の）弱集中逐次化"""
    return _linearize(fib, m, False, False)[0]


def _sequentialize_foc(fib: FreeBifibration, m: MultiDerivation) -> List[MultiDerivation]:
    """各 LR バイポールを seqRL / seqLR の両方で分解した単一集中導出"""
    view = to_bipoles(fib, m)
    if not any(isinstance(b, LRBipole) for b in view.bipoles):
        return [m]
    stacks: List[List[Bipole]] = [[]]
    for b in view.bipoles:
        if isinstance(b, LRBipole):
            stacks = [s + piece for s in stacks for piece in (_seq_rl(fib, b), _seq_lr(fib, b))]
        else:
            stacks = [s + [b] for s in stacks]
    return [from_bipoles(replace(view, bipoles=tuple(stack))) for stack in stacks]


def sequentialize(fib: FreeBifibration, m: MultiDerivation,
                  mode: str = 'foc') -> List[Union[MultiDerivation, WeakDerivation]]:
    """
    逐次化

    foc: 各 BiMult を二通りに分けた単一集中の強多重集中導出（2^k 個）
    inv: 各 BiDiv を二通りの順序で並べた弱集中導出
    all: BiDiv と BiMult の両方を二通りに並べた弱集中導出
    """
    if mode == 'foc':
        return _sequentialize_foc(fib, m)
    if mode == 'inv':
        return _linearize(fib, m, True, False)
    if mode == 'all':
        return _linearize(fib, m, True, True)
    raise IllFormed(
        f"未知の逐次化モード '{mode}' です",
        f"モードは {', '.join(MODES)} のいずれかです",
        "モード名を確認してください",
    )


def to_multi(fib: FreeBifibration, d: Derivation) -> MultiDerivation:
    """完全性の経路: 厳密化 → 弱集中の逆像 → 強化"""
    judgment = fib.judgment(d)
    strict = strictify_derivation(fib, d)
    return strengthen(fib, weak_preimage(fib, strict, judgment.lhs, judgment.rhs))


def to_derivation(fib: FreeBifibration, m: MultiDerivation) -> Derivation:
    """⌈InvSeq(m)⌉"""
    infer_multi(fib, m)
    return ceil(fib, inv_seq(fib, m))
