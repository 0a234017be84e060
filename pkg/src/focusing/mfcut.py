"""
強多重集中導出の直接カット

非中立な判断（左辺が Push 頭か右辺が Pull 頭）では両側の反転を
一度に取り出してから内側をカットし、中立な判断では集中規則の
組み合わせで場合分けする。
"""

import logging

from base.errors import IllFormed, NonComposable

from core.fibration import FreeBifibration
from core.formula import Pull, Push
from core.strictify import pull_block, push_block

from .multi import (
    MAtom, MBiDiv, MBiMult, MLDiv, MLMult, MRDiv, MRMult, MultiDerivation, infer_multi,
)
from .rewrite import normalize

logger = logging.getLogger(__name__)


def opcartcomp(fib: FreeBifibration, a: MultiDerivation) -> MultiDerivation:
    """opcart_π · a を a : Push_π N ⊢_f T から N ⊢_{⌊π⌋f} T として取り出す"""
    if isinstance(a, MLDiv):
        return a.body
    if isinstance(a, MBiDiv):
        return MRDiv(a.body, fib.compose(fib.composite(a.pi, a.pi[0].dom), a.f), a.rho)
    raise _shape('opcartcomp', a)


def cartcomp(fib: FreeBifibration, b: MultiDerivation) -> MultiDerivation:
    """b · cart_ρ を b : S ⊢_g Pull_ρ P から S ⊢_{g⌊ρ⌋} P として取り出す"""
    if isinstance(b, MRDiv):
        return b.body
    if isinstance(b, MBiDiv):
        return MLDiv(b.pi, fib.compose(b.f, fib.composite(b.rho, b.rho[0].dom)), b.body)
    raise _shape('cartcomp', b)


def _shape(name: str, m: MultiDerivation) -> IllFormed:
    return IllFormed(
        f"{name} を適用できない導出です",
        f"先頭が {type(m).__name__} で反転規則ではありません",
        "強多重集中の極性条件を満たす導出を渡してください",
        node=m,
    )


def _cut(fib: FreeBifibration, a: MultiDerivation, b: MultiDerivation) -> MultiDerivation:
    S = infer_multi(fib, a).lhs
    T = infer_multi(fib, b).rhs
    if isinstance(S, Push) or isinstance(T, Pull):
        pi = tuple(push_block(S)[0]) if isinstance(S, Push) else ()
        rho = tuple(pull_block(T)[0]) if isinstance(T, Pull) else ()
        fg = fib.compose(infer_multi(fib, a).base, infer_multi(fib, b).base)
        inner = _cut(fib, opcartcomp(fib, a) if pi else a, cartcomp(fib, b) if rho else b)
        if pi and rho:
            return MBiDiv(pi, fg, inner, rho)
        if pi:
            return MLDiv(pi, fg, inner)
        return MRDiv(inner, fg, rho)

    if isinstance(a, MLMult):
        return _cut_left_focus(fib, a.sigma, a.body, b)
    if isinstance(b, MRMult):
        return _cut_right_focus(fib, a, b.body, b.tau)
    if isinstance(a, MBiMult) and isinstance(b, MLDiv):
        return _cut_left_focus(fib, a.sigma, a.body, b.body)
    if isinstance(a, MRMult) and isinstance(b, MLDiv):
        return _cut(fib, a.body, b.body)
    if isinstance(a, MRDiv) and isinstance(b, MLMult):
        return _cut(fib, a.body, b.body)
    if isinstance(a, MRDiv) and isinstance(b, MBiMult):
        return _cut_right_focus(fib, a.body, b.body, b.tau)
    if isinstance(a, MAtom) and isinstance(b, MAtom):
        return MAtom(fib.domain.compose(a.delta, b.delta))
    raise NonComposable(
        "多重集中カットの場合分けに該当しません",
        f"{type(a).__name__} と {type(b).__name__} の組は境界が一致しません",
        "導出の判断を確認してください",
    )


def _cut_left_focus(fib: FreeBifibration, sigma, a_body: MultiDerivation, b: MultiDerivation) -> MultiDerivation:
    """(σ\\_ α') · b"""
    if isinstance(b, MRMult):
        return MBiMult(sigma, _cut(fib, a_body, b.body), b.tau)
    return MLMult(sigma, _cut(fib, a_body, b))


def _cut_right_focus(fib: FreeBifibration, a: MultiDerivation, b_body: MultiDerivation, tau) -> MultiDerivation:
    """a · (β' τ^)"""
    if isinstance(a, MLMult):
        return MBiMult(a.sigma, _cut(fib, a.body, b_body), tau)
    return MRMult(_cut(fib, a, b_body), tau)


def mf_cut(fib: FreeBifibration, a: MultiDerivation, b: MultiDerivation,
           renormalize: bool = True) -> MultiDerivation:
    """
    a : S ⊢_f U と b : U ⊢_g T から S ⊢_{fg} T を直接作る

    FP な基底では結果を par ∪ gra 正規形に戻す。

    Raises:
        NonComposable: a の右辺と b の左辺が一致しない場合
    """
    left = infer_multi(fib, a)
    right = infer_multi(fib, b)
    if left.rhs != right.lhs:
        raise NonComposable(
            "多重集中導出をカットできません",
            f"左導出の右辺 {left.rhs!r} と右導出の左辺 {right.lhs!r} が一致しません",
            "境界の論理式が等しい導出の組を渡してください",
        )
    result = _cut(fib, a, b)
    infer_multi(fib, result)
    if renormalize and fib.is_fp():
        result, _ = normalize(fib, result)
    return result
