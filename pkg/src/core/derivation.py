"""
導出の項構文と恒等導出・持ち上げ

    AtomAx(δ)          ⟨δ⟩
    LDiv(f, g, α)      f\\_g α   : α : S ⊢_{fg} T  から  Push(f,S) ⊢_g T
    RMult(α, f)        α·f^      : α : S' ⊢_{f'} S から  S' ⊢_{f'f} Push(f,S)
    LMult(g, α)        g_·α      : α : T ⊢_{g'} T' から  Pull(g,T) ⊢_{gg'} T'
    RDiv(α, f, g)      α/_f g    : α : S ⊢_{fg} T  から  S ⊢_f Pull(g,T)
"""

from dataclasses import dataclass
from typing import Dict, Tuple, Union, TYPE_CHECKING

from base.category import Arrow
from base.errors import IllFormed

from .formula import Atom, Formula, Pull, Push

if TYPE_CHECKING:
    from .fibration import FreeBifibration


@dataclass(frozen=True)
class AtomAx:
    delta: Arrow


@dataclass(frozen=True)
class LDiv:
    f: Arrow
    g: Arrow
    body: 'Derivation'


@dataclass(frozen=True)
class RMult:
    body: 'Derivation'
    f: Arrow


@dataclass(frozen=True)
class LMult:
    g: Arrow
    body: 'Derivation'


@dataclass(frozen=True)
class RDiv:
    body: 'Derivation'
    f: Arrow
    g: Arrow


Derivation = Union[AtomAx, LDiv, RMult, LMult, RDiv]

LEFT_RULES = (LDiv, LMult)
RIGHT_RULES = (RMult, RDiv)


def children(d: Derivation) -> Tuple[Derivation, ...]:
    return () if isinstance(d, AtomAx) else (d.body,)


def with_body(d: Derivation, body: Derivation) -> Derivation:
    """同じ規則で前提だけを差し替える"""
    if isinstance(d, LDiv):
        return LDiv(d.f, d.g, body)
    if isinstance(d, RMult):
        return RMult(body, d.f)
    if isinstance(d, LMult):
        return LMult(d.g, body)
    if isinstance(d, RDiv):
        return RDiv(body, d.f, d.g)
    return d


def depth(d: Derivation) -> int:
    n = 0
    while not isinstance(d, AtomAx):
        n += 1
        d = d.body
    return n


def identity(fib: 'FreeBifibration', S: Formula) -> Derivation:
    """S ⊢_{Id} S の恒等導出（S の構造に関する帰納）"""
    if isinstance(S, Atom):
        return AtomAx(fib.domain.identity(S.obj))
    if isinstance(S, Push):
        f = S.arrow
        return LDiv(f, fib.base.identity(f.cod), RMult(identity(fib, S.body), f))
    g = S.arrow
    return RDiv(LMult(g, identity(fib, S.body)), fib.base.identity(g.dom), g)


def opcart(fib: 'FreeBifibration', f: Arrow, S: Formula) -> Derivation:
    """S ⊢_f Push(f,S)"""
    fib.check_push(f, S)
    return RMult(identity(fib, S), f)


def cart(fib: 'FreeBifibration', g: Arrow, T: Formula) -> Derivation:
    """Pull(g,T) ⊢_g T"""
    fib.check_pull(g, T)
    return LMult(g, identity(fib, T))


def cartesian_lift(fib: 'FreeBifibration', direction: str, arrow: Arrow, S: Formula) -> Derivation:
    if direction == 'push':
        return opcart(fib, arrow, S)
    if direction == 'pull':
        return cart(fib, arrow, S)
    raise IllFormed(
        f"未知の持ち上げ方向 '{direction}' です",
        "push か pull のみ指定できます",
        "direction 引数を修正してください",
    )


def unit(fib: 'FreeBifibration', f: Arrow, S: Formula) -> Derivation:
    """η_S : S ⊢_{Id} Pull(f, Push(f,S))"""
    return RDiv(opcart(fib, f, S), fib.base.identity(f.dom), f)


def counit(fib: 'FreeBifibration', g: Arrow, T: Formula) -> Derivation:
    """ε_T : Push(g, Pull(g,T)) ⊢_{Id} T"""
    return LDiv(g, fib.base.identity(g.cod), cart(fib, g, T))


def pseudofunctor_witnesses(fib: 'FreeBifibration', f: Arrow, g: Arrow, S: Formula,
                            T: Formula) -> Dict[str, Tuple[Derivation, Derivation]]:
    """
    擬関手性の論理的同値を (forward, backward) の対で返す

    S は dom f 上、T は cod g 上の論理式（f·g が合成可能であること）。
    """
    base = fib.base
    fg = base.compose(f, g)
    witnesses = {
        'pushpush': (
            LDiv(g, base.identity(g.cod), LDiv(f, g, RMult(identity(fib, S), fg))),
            LDiv(fg, base.identity(g.cod), RMult(RMult(identity(fib, S), f), g)),
        ),
        'pullpull': (
            RDiv(LMult(f, LMult(g, identity(fib, T))), base.identity(f.dom), fg),
            RDiv(RDiv(LMult(fg, identity(fib, T)), f, g), base.identity(f.dom), f),
        ),
        'pushid': (
            LDiv(base.identity(S.ref), base.identity(S.ref), identity(fib, S)),
            RMult(identity(fib, S), base.identity(S.ref)),
        ),
        'pullid': (
            LMult(base.identity(T.ref), identity(fib, T)),
            RDiv(identity(fib, T), base.identity(T.ref), base.identity(T.ref)),
        ),
    }
    for forward, backward in witnesses.values():
        fib.judgment(forward)
        fib.judgment(backward)
    return witnesses
