"""
論理式と判断

Atom(X) | Push(f, S) | Pull(g, T) の不変木。ref は論理式が載る
基底圏の対象（Push は cod f、Pull は dom g）。
"""

from dataclasses import dataclass
from typing import Any, Iterator, List, Tuple, Union

from base.category import Arrow


@dataclass(frozen=True)
class Atom:
    obj: Any     # D の対象
    over: Any    # p(obj)

    @property
    def ref(self) -> Any:
        return self.over


@dataclass(frozen=True)
class Push:
    arrow: Arrow
    body: 'Formula'

    @property
    def ref(self) -> Any:
        return self.arrow.cod


@dataclass(frozen=True)
class Pull:
    arrow: Arrow
    body: 'Formula'

    @property
    def ref(self) -> Any:
        return self.arrow.dom


Formula = Union[Atom, Push, Pull]


@dataclass(frozen=True)
class Judgment:
    """S ⊢_base T"""
    lhs: Formula
    base: Arrow
    rhs: Formula


def subformulas(formula: Formula) -> Iterator[Formula]:
    """外側から順に部分論理式を列挙（自身を含む）"""
    while True:
        yield formula
        if isinstance(formula, Atom):
            return
        formula = formula.body


def is_subformula(small: Formula, big: Formula) -> bool:
    return any(small == s for s in subformulas(big))


def atom_of(formula: Formula) -> Atom:
    while not isinstance(formula, Atom):
        formula = formula.body
    return formula


def connectives(formula: Formula) -> List[Tuple[str, Arrow]]:
    """外側から順の (kind, arrow) 列。kind は 'push' か 'pull'"""
    result = []
    while not isinstance(formula, Atom):
        result.append(('push' if isinstance(formula, Push) else 'pull', formula.arrow))
        formula = formula.body
    return result


def is_strictly_alternating(formula: Formula) -> bool:
    """Push の直下に Push、Pull の直下に Pull が現れない"""
    while not isinstance(formula, Atom):
        if type(formula.body) is type(formula):
            return False
        formula = formula.body
    return True
