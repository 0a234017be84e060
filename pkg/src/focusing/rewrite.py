"""
バイポール表示と par ∪ gra 書き換え

中立な判断の強多重集中導出は、根から順に L / R / LR バイポールを
並べて公理で終わる列として読める。反転列 π, ρ は側が原子のとき空列 ()。

    L(σ, π, m)          結論の基底 ⌊σ⌋m        次の基底 ⌊π⌋m
    R(m, ρ, τ)          結論の基底 m⌊τ⌋        次の基底 m⌊ρ⌋
    LR(σ, π, m, ρ, τ)   結論の基底 ⌊σ⌋m⌊τ⌋     次の基底 ⌊π⌋m⌊ρ⌋

位置は根から数える（bipoles[0] が最も根に近い）。
"""

import logging
import random
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional, Tuple, Union

from base.category import Arrow
from base.errors import FPViolation, IllFormed, NotFP

from core.fibration import FreeBifibration

from .alternating import ArrowSeq
from .multi import (
    MAtom, MBiDiv, MBiMult, MLDiv, MLMult, MRDiv, MRMult, MultiDerivation, project,
)

logger = logging.getLogger(__name__)

RULES = ('seqRL', 'seqLR', 'parRL', 'parLR', 'graL', 'graR')
STRATEGIES = ('bottom_up', 'top_down', 'random')


@dataclass(frozen=True)
class LBipole:
    sigma: ArrowSeq
    pi: ArrowSeq
    m: Arrow

    kind = 'L'


@dataclass(frozen=True)
class RBipole:
    m: Arrow
    rho: ArrowSeq
    tau: ArrowSeq

    kind = 'R'


@dataclass(frozen=True)
class LRBipole:
    sigma: ArrowSeq
    pi: ArrowSeq
    m: Arrow
    rho: ArrowSeq
    tau: ArrowSeq

    kind = 'LR'


Bipole = Union[LBipole, RBipole, LRBipole]


@dataclass(frozen=True)
class BipoleView:
    """根の反転 (π0, f0, ρ0)（なければ None）、バイポール列、公理 δ"""
    root: Optional[Tuple[ArrowSeq, Arrow, ArrowSeq]]
    bipoles: Tuple[Bipole, ...]
    axiom: Arrow


def unique_filler(fib: FreeBifibration, f: Arrow, x: Arrow, y: Arrow, k: Arrow) -> Optional[Arrow]:
    """
    f·e = x かつ e·k = y を満たす e。なければ None

    Raises:
        FPViolation: FP 宣言下でフィラーが複数ある場合
    """
    if f.dom != x.dom or y.cod != k.cod or f.cod != y.dom or x.cod != k.dom:
        return None
    if fib.compose(f, y) != fib.compose(x, k):
        return None
    candidates = fib.base.fillers(f, x, y, k)
    if not candidates:
        return None
    if len(candidates) > 1 and fib.is_fp():
        raise FPViolation(
            "対角フィラーが一意ではありません",
            f"{len(candidates)} 個のフィラーが見つかりました（FP 宣言と矛盾）",
            "基底圏の FP 宣言を見直してください",
        )
    return candidates[0]


def _cmp(fib: FreeBifibration, seq: ArrowSeq, obj) -> Arrow:
    return fib.composite(seq, obj)


# --- 項とバイポール表示の変換 ---

def _inversion(pi: ArrowSeq, f: Arrow, body: MultiDerivation, rho: ArrowSeq) -> MultiDerivation:
    """空列の側は省いた反転ノード（両側空なら本体そのもの）"""
    if pi and rho:
        return MBiDiv(pi, f, body, rho)
    if pi:
        return MLDiv(pi, f, body)
    if rho:
        return MRDiv(body, f, rho)
    return body


def build_bipole(b: Bipole, rest: MultiDerivation) -> MultiDerivation:
    if isinstance(b, LBipole):
        return MLMult(b.sigma, _inversion(b.pi, b.m, rest, ()))
    if isinstance(b, RBipole):
        return MRMult(_inversion((), b.m, rest, b.rho), b.tau)
    return MBiMult(b.sigma, _inversion(b.pi, b.m, rest, b.rho), b.tau)


def _split_inversion(fib: FreeBifibration, x: MultiDerivation):
    """(π, f, ρ, 本体)。反転がなければ f は x の基底"""
    if isinstance(x, MBiDiv):
        return x.pi, x.f, x.rho, x.body
    if isinstance(x, MLDiv):
        return x.pi, x.f, (), x.body
    if isinstance(x, MRDiv):
        return (), x.f, x.rho, x.body
    return (), project(fib, x), (), x


def to_bipoles(fib: FreeBifibration, m: MultiDerivation) -> BipoleView:
    root = None
    node = m
    if isinstance(node, (MLDiv, MRDiv, MBiDiv)):
        pi, f, rho, node = _split_inversion(fib, node)
        root = (pi, f, rho)
    bipoles: List[Bipole] = []
    while not isinstance(node, MAtom):
        if isinstance(node, MLMult):
            pi, f, _, rest = _split_inversion(fib, node.body)
            bipoles.append(LBipole(node.sigma, pi, f))
        elif isinstance(node, MRMult):
            _, f, rho, rest = _split_inversion(fib, node.body)
            bipoles.append(RBipole(f, rho, node.tau))
        elif isinstance(node, MBiMult):
            pi, f, rho, rest = _split_inversion(fib, node.body)
            bipoles.append(LRBipole(node.sigma, pi, f, rho, node.tau))
        else:
            raise IllFormed(
                "バイポールに分解できません",
                f"集中規則の位置に {type(node).__name__} があります",
                "強多重集中の極性条件を満たす導出を渡してください",
                node=node,
            )
        node = rest
    return BipoleView(root, tuple(bipoles), node.delta)


def from_bipoles(view: BipoleView) -> MultiDerivation:
    term: MultiDerivation = MAtom(view.axiom)
    for b in reversed(view.bipoles):
        term = build_bipole(b, term)
    if view.root is not None:
        pi, f, rho = view.root
        term = _inversion(pi, f, term, rho)
    return term


# --- 書き換え規則（隣接バイポールに対する局所規則） ---

def _seq_rl(fib: FreeBifibration, b: LRBipole) -> List[Bipole]:
    tau = _cmp(fib, b.tau, None)
    pif = fib.compose(_cmp(fib, b.pi, b.m.dom), b.m)
    return [LBipole(b.sigma, b.pi, fib.compose(b.m, tau)), RBipole(pif, b.rho, b.tau)]


def _seq_lr(fib: FreeBifibration, b: LRBipole) -> List[Bipole]:
    sigmaf = fib.compose(_cmp(fib, b.sigma, None), b.m)
    rho = _cmp(fib, b.rho, b.m.cod)
    return [RBipole(sigmaf, b.rho, b.tau), LBipole(b.sigma, b.pi, fib.compose(b.m, rho))]


def _par_rl(fib: FreeBifibration, lower: Bipole, upper: Bipole) -> Optional[List[Bipole]]:
    if not (isinstance(lower, LBipole) and isinstance(upper, RBipole)):
        return None
    pi = _cmp(fib, lower.pi, lower.m.dom)
    f = unique_filler(fib, pi, upper.m, lower.m, _cmp(fib, upper.tau, None))
    if f is None:
        return None
    return [LRBipole(lower.sigma, lower.pi, f, upper.rho, upper.tau)]


def _par_lr(fib: FreeBifibration, lower: Bipole, upper: Bipole) -> Optional[List[Bipole]]:
    if not (isinstance(lower, RBipole) and isinstance(upper, LBipole)):
        return None
    rho = _cmp(fib, lower.rho, lower.m.cod)
    f = unique_filler(fib, _cmp(fib, upper.sigma, None), lower.m, upper.m, rho)
    if f is None:
        return None
    return [LRBipole(upper.sigma, upper.pi, f, lower.rho, lower.tau)]


def _gra_l(fib: FreeBifibration, lower: Bipole, upper: Bipole) -> Optional[List[Bipole]]:
    """[L(e,b',m), LR(b,a,f,c,d)] → [LR(e,b',g,c,d), L(b,a,f⌊c⌋)]  （⌊b⌋f = ⌊b'⌋g）"""
    if not (isinstance(lower, LBipole) and isinstance(upper, LRBipole)):
        return None
    b_prime = _cmp(fib, lower.pi, lower.m.dom)
    bf = fib.compose(_cmp(fib, upper.sigma, None), upper.m)
    g = unique_filler(fib, b_prime, bf, lower.m, _cmp(fib, upper.tau, None))
    if g is None:
        return None
    c = _cmp(fib, upper.rho, upper.m.cod)
    return [LRBipole(lower.sigma, lower.pi, g, upper.rho, upper.tau),
            LBipole(upper.sigma, upper.pi, fib.compose(upper.m, c))]


def _gra_r(fib: FreeBifibration, lower: Bipole, upper: Bipole) -> Optional[List[Bipole]]:
    """[R(m,d',e), LR(b,a,f,c,d)] → [LR(b,a,g,d',e), R(⌊a⌋f,c,d)]  （f⌊d⌋ = g⌊d'⌋）"""
    if not (isinstance(lower, RBipole) and isinstance(upper, LRBipole)):
        return None
    d_prime = _cmp(fib, lower.rho, lower.m.cod)
    fd = fib.compose(upper.m, _cmp(fib, upper.tau, None))
    g = unique_filler(fib, _cmp(fib, upper.sigma, None), lower.m, fd, d_prime)
    if g is None:
        return None
    af = fib.compose(_cmp(fib, upper.pi, upper.m.dom), upper.m)
    return [LRBipole(upper.sigma, upper.pi, g, lower.rho, lower.tau),
            RBipole(af, upper.rho, upper.tau)]


_PAIR_RULES: Dict[str, Callable] = {
    'parRL': _par_rl, 'parLR': _par_lr, 'graL': _gra_l, 'graR': _gra_r,
}


def _apply(fib: FreeBifibration, view: BipoleView, rule: str, pos: int) -> Optional[BipoleView]:
    bipoles = list(view.bipoles)
    if rule in ('seqRL', 'seqLR'):
        if not 0 <= pos < len(bipoles) or not isinstance(bipoles[pos], LRBipole):
            return None
        pieces = _seq_rl(fib, bipoles[pos]) if rule == 'seqRL' else _seq_lr(fib, bipoles[pos])
        return replace(view, bipoles=tuple(bipoles[:pos] + pieces + bipoles[pos + 1:]))
    if not 0 <= pos < len(bipoles) - 1:
        return None
    pieces = _PAIR_RULES[rule](fib, bipoles[pos], bipoles[pos + 1])
    if pieces is None:
        return None
    return replace(view, bipoles=tuple(bipoles[:pos] + pieces + bipoles[pos + 2:]))


def rewrite_step(fib: FreeBifibration, m: MultiDerivation, rule: str, pos: int) -> Optional[MultiDerivation]:
    """
    位置 pos（根から数えたバイポール番号。対の規則では下側）に規則を一回適用する

    Returns:
        書き換え後の導出。redex がなければ None

    Raises:
        FPViolation: par/gra のフィラーが FP 宣言下で一意でない場合
    """
    if rule not in RULES:
        raise IllFormed(
            f"未知の書き換え規則 '{rule}' です",
            f"規則は {', '.join(RULES)} のいずれかです",
            "規則名を確認してください",
        )
    view = _apply(fib, to_bipoles(fib, m), rule, pos)
    return None if view is None else from_bipoles(view)


def weight(fib: FreeBifibration, m: MultiDerivation) -> int:
    """Σ 位置 × (L/R は 1、LR は 2)"""
    view = to_bipoles(fib, m)
    return sum(i * (2 if isinstance(b, LRBipole) else 1) for i, b in enumerate(view.bipoles))


def redexes(fib: FreeBifibration, m: MultiDerivation) -> List[Tuple[str, int]]:
    """par/gra の redex 一覧（根から、同じ位置では gra を先に）"""
    view = to_bipoles(fib, m)
    found = []
    for i in range(len(view.bipoles) - 1):
        for rule in ('graL', 'graR', 'parRL', 'parLR'):
            if _PAIR_RULES[rule](fib, view.bipoles[i], view.bipoles[i + 1]) is not None:
                found.append((rule, i))
    return found


def is_maximal(fib: FreeBifibration, m: MultiDerivation) -> bool:
    """par/gra の redex を持たない"""
    return not redexes(fib, m)


def normalize(fib: FreeBifibration, m: MultiDerivation, strategy: str = 'bottom_up',
              seed: Optional[int] = None) -> Tuple[MultiDerivation, int]:
    """
    par ∪ gra 正規形と書き換え回数

    FP の下では正規形は戦略によらず一意。

    Raises:
        NotFP: 基底が FP でない場合
        FPViolation: フィラーが一意でない場合
    """
    if not fib.is_fp():
        raise NotFP(
            "正規化には FP な基底が必要です",
            f"{fib.base.name} は push/pull クラスについて FP と宣言されていません",
            "FP な基底を使うか BFS で判定してください",
        )
    if strategy not in STRATEGIES:
        raise IllFormed(
            f"未知の正規化戦略 '{strategy}' です",
            f"戦略は {', '.join(STRATEGIES)} のいずれかです",
            "戦略名を確認してください",
        )
    rng = random.Random(seed)
    view = to_bipoles(fib, m)
    steps = 0
    while True:
        candidates = []
        for i in range(len(view.bipoles) - 1):
            for rule in ('graL', 'graR', 'parRL', 'parLR'):
                pieces = _PAIR_RULES[rule](fib, view.bipoles[i], view.bipoles[i + 1])
                if pieces is not None:
                    candidates.append((i, pieces))
            if candidates and strategy == 'bottom_up':
                break
        if not candidates:
            break
        if strategy == 'bottom_up':
            i, pieces = candidates[0]
        elif strategy == 'top_down':
            top = candidates[-1][0]
            i, pieces = next(c for c in candidates if c[0] == top)
        else:
            i, pieces = rng.choice(candidates)
        bipoles = list(view.bipoles)
        view = replace(view, bipoles=tuple(bipoles[:i] + pieces + bipoles[i + 2:]))
        steps += 1
    logger.debug("normalized in %d steps (%s)", steps, strategy)
    return from_bipoles(view), steps
