"""
交代構文による論理式の見方

任意の論理式は極大な Push/Pull ブロックの交代列として一意に読める。
ブロック π = (f0..fn) は ⌈·⌉ では反復 Push/Pull、⌊·⌋ では合成射 ⌊π⌋ 一本。
"""

from dataclasses import dataclass
from typing import Any, Tuple, Union

from base.category import Arrow

from core.fibration import FreeBifibration
from core.formula import Atom, Formula, Pull, Push, is_strictly_alternating
from core.strictify import pull_block, push_block

ArrowSeq = Tuple[Arrow, ...]


@dataclass(frozen=True)
class AltAtom:
    obj: Any
    over: Any


@dataclass(frozen=True)
class AltPush:
    seq: ArrowSeq          # f0 が最内
    body: 'AltFormula'


@dataclass(frozen=True)
class AltPull:
    seq: ArrowSeq          # g0 が最外
    body: 'AltFormula'


AltFormula = Union[AltAtom, AltPush, AltPull]


def alternate(S: Formula) -> AltFormula:
    """⌈A⌉ = S となる唯一の交代構文 A"""
    if isinstance(S, Atom):
        return AltAtom(S.obj, S.over)
    if isinstance(S, Push):
        pi, body = push_block(S)
        return AltPush(tuple(pi), alternate(body))
    sigma, body = pull_block(S)
    return AltPull(tuple(sigma), alternate(body))


def ceil_formula(A: AltFormula) -> Formula:
    if isinstance(A, AltAtom):
        return Atom(A.obj, A.over)
    body = ceil_formula(A.body)
    if isinstance(A, AltPush):
        for f in A.seq:
            body = Push(f, body)
        return body
    for g in reversed(A.seq):
        body = Pull(g, body)
    return body


def floor_formula(fib: FreeBifibration, A: AltFormula) -> Formula:
    if isinstance(A, AltAtom):
        return Atom(A.obj, A.over)
    body = floor_formula(fib, A.body)
    composite = fib.composite(A.seq, A.seq[0].dom)
    return Push(composite, body) if isinstance(A, AltPush) else Pull(composite, body)


__all__ = [
    'AltAtom', 'AltPush', 'AltPull', 'AltFormula', 'ArrowSeq',
    'alternate', 'ceil_formula', 'floor_formula', 'is_strictly_alternating',
]
