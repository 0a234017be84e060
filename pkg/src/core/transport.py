"""
基底関手に沿った論理式・導出の輸送

F : C -> C' に対し、p : D -> C 上の自由ファイブレーションから
F∘p 上のものへ、射を F で写して論理式と導出を移す。
"""

from typing import Optional

from base.functor import FunctorDef

from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from .fibration import FreeBifibration
from .formula import Atom, Formula, Pull, Push


def transport_fibration(fib: FreeBifibration, functor: FunctorDef, push_class: str = 'all',
                        pull_class: str = 'all', name: Optional[str] = None) -> FreeBifibration:
    """F∘p 上の自由ファイブレーション"""
    p = fib.functor
    composite = FunctorDef(
        p.source, functor.target,
        lambda x: functor.on_object(p.on_object(x)),
        lambda a: functor.on_arrow(p.on_arrow(a)),
    )
    return FreeBifibration(composite, push_class, pull_class, name or f"{fib.name}>{functor.target.name}")


def transport_formula(target: FreeBifibration, functor: FunctorDef, S: Formula) -> Formula:
    if isinstance(S, Atom):
        return target.atom(S.obj)
    body = transport_formula(target, functor, S.body)
    if isinstance(S, Push):
        return target.push(functor.on_arrow(S.arrow), body)
    return target.pull(functor.on_arrow(S.arrow), body)


def transport_derivation(target: FreeBifibration, functor: FunctorDef, d: Derivation) -> Derivation:
    F = functor.on_arrow
    if isinstance(d, AtomAx):
        return d
    body = transport_derivation(target, functor, d.body)
    if isinstance(d, LDiv):
        return LDiv(F(d.f), F(d.g), body)
    if isinstance(d, RMult):
        return RMult(body, F(d.f))
    if isinstance(d, LMult):
        return LMult(F(d.g), body)
    return RDiv(body, F(d.f), F(d.g))
