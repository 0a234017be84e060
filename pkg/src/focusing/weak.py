"""
弱集中（weakly focused）導出

ブロック規則だけを使う導出。各規則は極大なブロック全体を一度に扱う。

    WAtom(δ)
    WLDiv(π, g, α)    α : N ⊢_{⌊π⌋g} T      から  Push_π N ⊢_g T
    WRMult(α, τ)      α : S ⊢_f N           から  S ⊢_{f⌊τ⌋} Push_τ N
    WLMult(σ, α)      α : P ⊢_g T           から  Pull_σ P ⊢_{⌊σ⌋g} T
    WRDiv(α, f, ρ)    α : S ⊢_{f⌊ρ⌋} P      から  S ⊢_f Pull_ρ P
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from base.errors import IllFormed, NotStrictlyAlternating

from core.derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from core.fibration import FreeBifibration
from core.formula import Formula, Judgment, Pull, Push, is_strictly_alternating
from core.strictify import ldiv_chain, pull_block, push_block, strictify_formula

from .alternating import ArrowSeq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WAtom:
    delta: object


@dataclass(frozen=True)
class WLDiv:
    pi: ArrowSeq
    g: object
    body: 'WeakDerivation'


@dataclass(frozen=True)
class WRMult:
    body: 'WeakDerivation'
    tau: ArrowSeq


@dataclass(frozen=True)
class WLMult:
    sigma: ArrowSeq
    body: 'WeakDerivation'


@dataclass(frozen=True)
class WRDiv:
    body: 'WeakDerivation'
    f: object
    rho: ArrowSeq


WeakDerivation = Union[WAtom, WLDiv, WRMult, WLMult, WRDiv]


def _block_error(rule: str, why: str) -> IllFormed:
    return IllFormed(
        f"弱集中規則 {rule} のブロックが極大ではありません",
        why,
        "ブロックは極大な Push/Pull の列全体を取ってください",
    )


def infer_weak(fib: FreeBifibration, w: WeakDerivation) -> Judgment:
    """
    ⌈·⌉ 解釈での判断を推論し、ブロックの極大性も確認する

    Raises:
        IllFormed: 側条件違反・空ブロック・非極大ブロック
    """
    if isinstance(w, WAtom):
        return fib.judgment(AtomAx(w.delta))
    premise = infer_weak(fib, w.body)
    if isinstance(w, WLDiv):
        if not w.pi:
            raise _block_error('WLDiv', "π が空です")
        if isinstance(premise.lhs, Push):
            raise _block_error('WLDiv', "前提の左辺がまだ Push 頭です")
        if fib.compose(fib.composite(w.pi, w.pi[0].dom), w.g) != premise.base:
            raise IllFormed(
                "WLDiv の分解が一致しません",
                "⌊π⌋·g が前提の基底になりません",
                "前提の基底を ⌊π⌋·g に分解してください",
                node=w,
            )
        lhs = premise.lhs
        for f in w.pi:
            lhs = fib.push(f, lhs)
        return Judgment(lhs, w.g, premise.rhs)
    if isinstance(w, WRMult):
        if not w.tau:
            raise _block_error('WRMult', "τ が空です")
        if isinstance(premise.rhs, Push):
            raise _block_error('WRMult', "前提の右辺がまだ Push 頭です")
        rhs = premise.rhs
        for f in w.tau:
            rhs = fib.push(f, rhs)
        return Judgment(premise.lhs, fib.compose(premise.base, fib.composite(w.tau, w.tau[0].dom)), rhs)
    if isinstance(w, WLMult):
        if not w.sigma:
            raise _block_error('WLMult', "σ が空です")
        if isinstance(premise.lhs, Pull):
            raise _block_error('WLMult', "前提の左辺がまだ Pull 頭です")
        lhs = premise.lhs
        for g in reversed(w.sigma):
            lhs = fib.pull(g, lhs)
        return Judgment(lhs, fib.compose(fib.composite(w.sigma, w.sigma[0].dom), premise.base), premise.rhs)
    if not w.rho:
        raise _block_error('WRDiv', "ρ が空です")
    if isinstance(premise.rhs, Pull):
        raise _block_error('WRDiv', "前提の右辺がまだ Pull 頭です")
    if fib.compose(w.f, fib.composite(w.rho, w.rho[0].dom)) != premise.base:
        raise IllFormed(
            "WRDiv の分解が一致しません",
            "f·⌊ρ⌋ が前提の基底になりません",
            "前提の基底を f·⌊ρ⌋ に分解してください",
            node=w,
        )
    rhs = premise.rhs
    for g in reversed(w.rho):
        rhs = fib.pull(g, rhs)
    return Judgment(premise.lhs, w.f, rhs)


def ceil(fib: FreeBifibration, w: WeakDerivation) -> Derivation:
    """大ステップ規則を小ステップ規則の反復に展開する"""
    if isinstance(w, WAtom):
        return AtomAx(w.delta)
    body = ceil(fib, w.body)
    if isinstance(w, WLDiv):
        return ldiv_chain(fib, list(w.pi), w.g, body)
    if isinstance(w, WRMult):
        for f in w.tau:
            body = RMult(body, f)
        return body
    if isinstance(w, WLMult):
        for g in reversed(w.sigma):
            body = LMult(g, body)
        return body
    # 最内の除算から外へ: RDiv(α, f·ρ0…ρ(n-1), ρn) … RDiv(·, f, ρ0)
    prefixes = [w.f]
    for g in w.rho[:-1]:
        prefixes.append(fib.compose(prefixes[-1], g))
    for k in range(len(w.rho) - 1, -1, -1):
        body = RDiv(body, prefixes[k], w.rho[k])
    return body


def floor(fib: FreeBifibration, w: WeakDerivation) -> Derivation:
    """各ブロックを合成射一本の規則に縮める"""
    if isinstance(w, WAtom):
        return AtomAx(w.delta)
    body = floor(fib, w.body)
    if isinstance(w, WLDiv):
        return LDiv(fib.composite(w.pi, w.pi[0].dom), w.g, body)
    if isinstance(w, WRMult):
        return RMult(body, fib.composite(w.tau, w.tau[0].dom))
    if isinstance(w, WLMult):
        return LMult(fib.composite(w.sigma, w.sigma[0].dom), body)
    return RDiv(body, w.f, fib.composite(w.rho, w.rho[0].dom))


def weak_views(fib: FreeBifibration, x: Union[Formula, WeakDerivation]) -> Tuple[object, object]:
    """(⌈x⌉, ⌊x⌋)。論理式なら (S, ⌊S⌋)、弱集中導出なら二つの導出"""
    if isinstance(x, (WAtom, WLDiv, WRMult, WLMult, WRDiv)):
        return ceil(fib, x), floor(fib, x)
    return x, strictify_formula(fib, x)


def _mismatch(d: Derivation, side: str) -> NotStrictlyAlternating:
    return NotStrictlyAlternating(
        f"{type(d).__name__} が交代構文のブロックと噛み合いません",
        f"{side} の形が規則と一致しません",
        "厳密交代な論理式だけを含む導出を渡してください",
    )


def weak_preimage(fib: FreeBifibration, d: Derivation,
                  S: Optional[Formula] = None, T: Optional[Formula] = None) -> WeakDerivation:
    """
    ⌊α_w⌋ = d となる唯一の弱集中導出 α_w : S ⊢ T

    S, T を省略すると d の判断そのもの（各ブロックが一本）を使う。

    Raises:
        NotStrictlyAlternating: d が厳密交代でない、または S, T と合わない場合
    """
    judgment = fib.judgment(d)
    if not (is_strictly_alternating(judgment.lhs) and is_strictly_alternating(judgment.rhs)):
        raise NotStrictlyAlternating(
            "厳密交代でない判断の導出です",
            "Push の直下の Push か Pull の直下の Pull を含んでいます",
            "先に strictify_derivation で厳密化してください",
        )
    S = judgment.lhs if S is None else S
    T = judgment.rhs if T is None else T
    if strictify_formula(fib, S) != judgment.lhs or strictify_formula(fib, T) != judgment.rhs:
        raise NotStrictlyAlternating(
            "指定の論理式の厳密化が導出の判断と一致しません",
            "⌊S⌋, ⌊T⌋ が導出の両辺ではありません",
            "導出の判断を厳密化した元の論理式を渡してください",
        )
    return _preimage(d, S, T)


def _preimage(d: Derivation, S: Formula, T: Formula) -> WeakDerivation:
    if isinstance(d, AtomAx):
        return WAtom(d.delta)
    if isinstance(d, LDiv):
        if not isinstance(S, Push):
            raise _mismatch(d, '左辺')
        pi, body = push_block(S)
        return WLDiv(tuple(pi), d.g, _preimage(d.body, body, T))
    if isinstance(d, RMult):
        if not isinstance(T, Push):
            raise _mismatch(d, '右辺')
        tau, body = push_block(T)
        return WRMult(_preimage(d.body, S, body), tuple(tau))
    if isinstance(d, LMult):
        if not isinstance(S, Pull):
            raise _mismatch(d, '左辺')
        sigma, body = pull_block(S)
        return WLMult(tuple(sigma), _preimage(d.body, body, T))
    if not isinstance(T, Pull):
        raise _mismatch(d, '右辺')
    rho, body = pull_block(T)
    return WRDiv(_preimage(d.body, S, body), d.f, tuple(rho))
