"""
強多重集中（strongly multifocused）導出

反転規則（LDiv/RDiv/BiDiv）は非中立な判断にだけ、集中規則
（LMult/RMult/BiMult）は中立な判断 N ⊢ P にだけ適用できる。

    MAtom(δ)
    MLDiv(π, f, α)        α : N ⊢_{⌊π⌋f} P        から  Push_π N ⊢_f P
    MRDiv(α, f, ρ)        α : N ⊢_{f⌊ρ⌋} P        から  N ⊢_f Pull_ρ P
    MBiDiv(π, f, α, ρ)    α : N ⊢_{⌊π⌋f⌊ρ⌋} P     から  Push_π N ⊢_f Pull_ρ P
    MLMult(σ, α)          α : P ⊢_g Q             から  Pull_σ P ⊢_{⌊σ⌋g} Q
    MRMult(α, τ)          α : N ⊢_g M             から  N ⊢_{g⌊τ⌋} Push_τ M
    MBiMult(σ, α, τ)      α : P ⊢_g N             から  Pull_σ P ⊢_{⌊σ⌋g⌊τ⌋} Push_τ N
"""

import weakref
from dataclasses import dataclass
from typing import Any, Union

from base.cache import BoundedCache
from base.category import Arrow
from base.errors import IllFormed, ParseError

from config.environment import get_search_config

from core.derivation import AtomAx
from core.fibration import FreeBifibration
from core.formula import Judgment, Pull, Push
from core.sexpr import SExpr, _arrow, read

from .alternating import ArrowSeq


@dataclass(frozen=True)
class MAtom:
    delta: Arrow


@dataclass(frozen=True)
class MLDiv:
    pi: ArrowSeq
    f: Arrow
    body: 'MultiDerivation'


@dataclass(frozen=True)
class MRDiv:
    body: 'MultiDerivation'
    f: Arrow
    rho: ArrowSeq


@dataclass(frozen=True)
class MBiDiv:
    pi: ArrowSeq
    f: Arrow
    body: 'MultiDerivation'
    rho: ArrowSeq


@dataclass(frozen=True)
class MLMult:
    sigma: ArrowSeq
    body: 'MultiDerivation'


@dataclass(frozen=True)
class MRMult:
    body: 'MultiDerivation'
    tau: ArrowSeq


@dataclass(frozen=True)
class MBiMult:
    sigma: ArrowSeq
    body: 'MultiDerivation'
    tau: ArrowSeq


MultiDerivation = Union[MAtom, MLDiv, MRDiv, MBiDiv, MLMult, MRMult, MBiMult]

INVERSIONS = (MLDiv, MRDiv, MBiDiv)
FOCI = (MLMult, MRMult, MBiMult)


class MultiContext:
    """判断推論のキャッシュ付きラッパ"""

    def __init__(self, fib: FreeBifibration):
        self.fib = fib
        self._cache: BoundedCache[Judgment] = BoundedCache(get_search_config()['cache_size'])

    def judgment(self, m: MultiDerivation) -> Judgment:
        cached = self._cache.get(m)
        if cached is None:
            cached = _infer(self, m)
            self._cache.put(m, cached)
        return cached


_contexts: "weakref.WeakKeyDictionary[FreeBifibration, MultiContext]" = weakref.WeakKeyDictionary()


def _context(fib: FreeBifibration) -> MultiContext:
    ctx = _contexts.get(fib)
    if ctx is None:
        ctx = MultiContext(fib)
        _contexts[fib] = ctx
    return ctx


def _polarity(rule: str, why: str, node: Any) -> IllFormed:
    return IllFormed(
        f"規則 {rule} の極性条件に違反しています",
        why,
        "反転は非中立な判断に、集中は中立な判断にだけ使ってください",
        node=node,
    )


def _nonempty(rule: str, seq: ArrowSeq, name: str, node: Any):
    if not seq:
        raise _polarity(rule, f"{name} が空です", node)


def _push_all(fib: FreeBifibration, seq: ArrowSeq, S):
    for f in seq:
        S = fib.push(f, S)
    return S


def _pull_all(fib: FreeBifibration, seq: ArrowSeq, T):
    for g in reversed(seq):
        T = fib.pull(g, T)
    return T


def _composite(fib: FreeBifibration, seq: ArrowSeq) -> Arrow:
    return fib.composite(seq, seq[0].dom)


def _infer(ctx: MultiContext, m: MultiDerivation) -> Judgment:
    fib = ctx.fib
    if isinstance(m, MAtom):
        return fib.judgment(AtomAx(m.delta))
    premise = ctx.judgment(m.body)
    name = type(m).__name__

    if isinstance(m, (MLDiv, MRDiv, MBiDiv)):
        # 反転：前提は中立
        if isinstance(premise.lhs, Push) or isinstance(premise.rhs, Pull):
            raise _polarity(name, "前提が中立な判断 N ⊢ P ではありません", m)
        pi = m.pi if isinstance(m, (MLDiv, MBiDiv)) else ()
        rho = m.rho if isinstance(m, (MRDiv, MBiDiv)) else ()
        if isinstance(m, (MLDiv, MBiDiv)):
            _nonempty(name, pi, 'π', m)
        if isinstance(m, (MRDiv, MBiDiv)):
            _nonempty(name, rho, 'ρ', m)
        expected = m.f
        if pi:
            expected = fib.compose(_composite(fib, pi), expected)
        if rho:
            expected = fib.compose(expected, _composite(fib, rho))
        if expected != premise.base:
            raise IllFormed(
                f"{name} の分解が一致しません",
                "⌊π⌋·f·⌊ρ⌋ が前提の基底になりません",
                "前提の基底を反転する列と f に分解してください",
                node=m,
            )
        return Judgment(_push_all(fib, pi, premise.lhs), m.f, _pull_all(fib, rho, premise.rhs))

    sigma = m.sigma if isinstance(m, (MLMult, MBiMult)) else ()
    tau = m.tau if isinstance(m, (MRMult, MBiMult)) else ()
    if isinstance(m, (MLMult, MBiMult)):
        _nonempty(name, sigma, 'σ', m)
        if isinstance(premise.lhs, Pull):
            raise _polarity(name, "前提の左辺がまだ Pull 頭です", m)
    if isinstance(m, (MRMult, MBiMult)):
        _nonempty(name, tau, 'τ', m)
        if isinstance(premise.rhs, Push):
            raise _polarity(name, "前提の右辺がまだ Push 頭です", m)
    if isinstance(m, MLMult) and isinstance(premise.rhs, Pull):
        raise _polarity(name, "結論の右辺が Pull 頭で中立ではありません", m)
    if isinstance(m, MRMult) and isinstance(premise.lhs, Push):
        raise _polarity(name, "結論の左辺が Push 頭で中立ではありません", m)
    base = premise.base
    if sigma:
        base = fib.compose(_composite(fib, sigma), base)
    if tau:
        base = fib.compose(base, _composite(fib, tau))
    return Judgment(_pull_all(fib, sigma, premise.lhs), base, _push_all(fib, tau, premise.rhs))


def infer_multi(fib: FreeBifibration, m: MultiDerivation) -> Judgment:
    """
    強多重集中導出の判断（⌈·⌉ 解釈の論理式）

    Raises:
        IllFormed: 側条件・極性条件の違反
    """
    return _context(fib).judgment(m)


def project(fib: FreeBifibration, m: MultiDerivation) -> Arrow:
    return infer_multi(fib, m).base


def uses_bimult(m: MultiDerivation) -> bool:
    while not isinstance(m, MAtom):
        if isinstance(m, MBiMult):
            return True
        m = m.body
    return False


# --- S 式 ---
#   (m-ax d) (m-ldiv (π) f M) (m-rdiv M f (ρ)) (m-bidiv (π) f M (ρ))
#   (m-lmult (σ) M) (m-rmult M (τ)) (m-bimult (σ) M (τ))

def _show_seq(fib: FreeBifibration, seq: ArrowSeq) -> str:
    return "(" + " ".join(fib.base.show(a) for a in seq) + ")"


def show_multi(fib: FreeBifibration, m: MultiDerivation) -> str:
    show = fib.base.show
    if isinstance(m, MAtom):
        return f"(m-ax {fib.domain.show(m.delta)})"
    body = show_multi(fib, m.body)
    if isinstance(m, MLDiv):
        return f"(m-ldiv {_show_seq(fib, m.pi)} {show(m.f)} {body})"
    if isinstance(m, MRDiv):
        return f"(m-rdiv {body} {show(m.f)} {_show_seq(fib, m.rho)})"
    if isinstance(m, MBiDiv):
        return f"(m-bidiv {_show_seq(fib, m.pi)} {show(m.f)} {body} {_show_seq(fib, m.rho)})"
    if isinstance(m, MLMult):
        return f"(m-lmult {_show_seq(fib, m.sigma)} {body})"
    if isinstance(m, MRMult):
        return f"(m-rmult {body} {_show_seq(fib, m.tau)})"
    return f"(m-bimult {_show_seq(fib, m.sigma)} {body} {_show_seq(fib, m.tau)})"


def _seq(fib: FreeBifibration, node: SExpr) -> ArrowSeq:
    if not isinstance(node, list):
        raise ParseError("射の列として読めません", f"{node!r} はリストではありません", "(f g) の形で書いてください")
    return tuple(_arrow(fib.base, item) for item in node)


_ARITY = {'m-ax': 1, 'm-ldiv': 3, 'm-rdiv': 3, 'm-bidiv': 4, 'm-lmult': 2, 'm-rmult': 2, 'm-bimult': 3}


def multi_from_sexpr(fib: FreeBifibration, node: SExpr) -> MultiDerivation:
    if not isinstance(node, list) or not node or node[0] not in _ARITY:
        raise ParseError("多重集中導出として読めません", f"{node!r} は既知の形ではありません", "(m-ax d) などの形で書いてください")
    head, args = node[0], node[1:]
    if len(args) != _ARITY[head]:
        raise ParseError(f"'{head}' の引数の数が違います", f"{_ARITY[head]} 個必要ですが {len(args)} 個です", "構文表を確認してください")
    if head == 'm-ax':
        return MAtom(_arrow(fib.domain, args[0]))
    if head == 'm-ldiv':
        return MLDiv(_seq(fib, args[0]), _arrow(fib.base, args[1]), multi_from_sexpr(fib, args[2]))
    if head == 'm-rdiv':
        return MRDiv(multi_from_sexpr(fib, args[0]), _arrow(fib.base, args[1]), _seq(fib, args[2]))
    if head == 'm-bidiv':
        return MBiDiv(_seq(fib, args[0]), _arrow(fib.base, args[1]),
                      multi_from_sexpr(fib, args[2]), _seq(fib, args[3]))
    if head == 'm-lmult':
        return MLMult(_seq(fib, args[0]), multi_from_sexpr(fib, args[1]))
    if head == 'm-rmult':
        return MRMult(multi_from_sexpr(fib, args[0]), _seq(fib, args[1]))
    return MBiMult(_seq(fib, args[0]), multi_from_sexpr(fib, args[1]), _seq(fib, args[2]))


def parse_multi(fib: FreeBifibration, text: str) -> MultiDerivation:
    m = multi_from_sexpr(fib, read(text))
    infer_multi(fib, m)
    return m

