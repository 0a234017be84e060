"""
S 式の構文

    論理式: (atom X) | (push f S) | (pull g S)
    導出:   (ax d) | (ldiv f g D) | (rmult D f) | (lmult g D) | (rdiv D f g)

射のトークンは基底（ax は定義域）の提示ファイルの構文に従う。
"""

import re
from typing import List, Union

from base.category import Arrow, CategoryBackend
from base.errors import BifibError, ParseError

from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from .fibration import FreeBifibration
from .formula import Atom, Formula, Pull, Push

SExpr = Union[str, List['SExpr']]

_TOKEN = re.compile(r'\(|\)|[^\s()]+')


def read(text: str) -> SExpr:
    """テキストを入れ子リストに読む"""
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ParseError("S 式が空です", "トークンがありません", "例: (atom *)")
    position = 0

    def parse() -> SExpr:
        nonlocal position
        if position >= len(tokens):
            raise ParseError("S 式が途中で終わっています", "閉じ括弧が足りません", "括弧の対応を確認してください")
        token = tokens[position]
        position += 1
        if token == ')':
            raise ParseError("予期しない ')' です", f"位置 {position - 1} で閉じ括弧が現れました", "括弧の対応を確認してください")
        if token != '(':
            return token
        items: List[SExpr] = []
        while True:
            if position >= len(tokens):
                raise ParseError("S 式が途中で終わっています", "閉じ括弧が足りません", "括弧の対応を確認してください")
            if tokens[position] == ')':
                position += 1
                return items
            items.append(parse())

    result = parse()
    if position != len(tokens):
        raise ParseError(
            "S 式の後ろに余分なトークンがあります",
            f"'{' '.join(tokens[position:])}' が残っています",
            "一つの S 式だけを渡してください",
        )
    return result


def _expect(node: SExpr, head: str, arity: int) -> List[SExpr]:
    if not isinstance(node, list) or not node or node[0] != head or len(node) != arity + 1:
        raise ParseError(
            f"'{head}' 形式として読めません",
            f"{node!r} は ({head} …) の {arity} 引数形ではありません",
            "構文表を確認してください",
        )
    return node[1:]


def _token(node: SExpr) -> str:
    if not isinstance(node, str):
        raise ParseError("射トークンの位置にリストがあります", f"{node!r} はトークンではありません", "射は括弧なしで書いてください")
    return node


def _arrow(backend: CategoryBackend, node: SExpr) -> Arrow:
    try:
        return backend.parse_arrow(_token(node))
    except ParseError:
        raise
    except BifibError as e:
        raise ParseError(f"射 '{node}' を読めません", e.why, e.how)


def formula_from_sexpr(fib: FreeBifibration, node: SExpr) -> Formula:
    if not isinstance(node, list) or not node:
        raise ParseError("論理式として読めません", f"{node!r} はリストではありません", "(atom X) などの形で書いてください")
    head = node[0]
    if head == 'atom':
        (obj,) = _expect(node, 'atom', 1)
        return fib.atom(fib.domain.parse_object(_token(obj)))
    if head == 'push':
        f, body = _expect(node, 'push', 2)
        return fib.push(_arrow(fib.base, f), formula_from_sexpr(fib, body))
    if head == 'pull':
        g, body = _expect(node, 'pull', 2)
        return fib.pull(_arrow(fib.base, g), formula_from_sexpr(fib, body))
    raise ParseError(f"未知の論理式 '{head}' です", "atom/push/pull のいずれでもありません", "構文表を確認してください")


def derivation_from_sexpr(fib: FreeBifibration, node: SExpr) -> Derivation:
    if not isinstance(node, list) or not node:
        raise ParseError("導出として読めません", f"{node!r} はリストではありません", "(ax d) などの形で書いてください")
    head = node[0]
    if head == 'ax':
        (delta,) = _expect(node, 'ax', 1)
        return AtomAx(_arrow(fib.domain, delta))
    if head == 'ldiv':
        f, g, body = _expect(node, 'ldiv', 3)
        return LDiv(_arrow(fib.base, f), _arrow(fib.base, g), derivation_from_sexpr(fib, body))
    if head == 'rmult':
        body, f = _expect(node, 'rmult', 2)
        return RMult(derivation_from_sexpr(fib, body), _arrow(fib.base, f))
    if head == 'lmult':
        g, body = _expect(node, 'lmult', 2)
        return LMult(_arrow(fib.base, g), derivation_from_sexpr(fib, body))
    if head == 'rdiv':
        body, f, g = _expect(node, 'rdiv', 3)
        return RDiv(derivation_from_sexpr(fib, body), _arrow(fib.base, f), _arrow(fib.base, g))
    raise ParseError(f"未知の導出 '{head}' です", "ax/ldiv/rmult/lmult/rdiv のいずれでもありません", "構文表を確認してください")


def parse_formula(fib: FreeBifibration, text: str) -> Formula:
    return formula_from_sexpr(fib, read(text))


def parse_derivation(fib: FreeBifibration, text: str) -> Derivation:
    """導出を読み、判断推論で妥当性も確認する"""
    d = derivation_from_sexpr(fib, read(text))
    fib.judgment(d)
    return d


def show_formula(fib: FreeBifibration, S: Formula) -> str:
    if isinstance(S, Atom):
        return f"(atom {S.obj})"
    head = 'push' if isinstance(S, Push) else 'pull'
    return f"({head} {fib.base.show(S.arrow)} {show_formula(fib, S.body)})"


def show_derivation(fib: FreeBifibration, d: Derivation) -> str:
    show = fib.base.show
    if isinstance(d, AtomAx):
        return f"(ax {fib.domain.show(d.delta)})"
    if isinstance(d, LDiv):
        return f"(ldiv {show(d.f)} {show(d.g)} {show_derivation(fib, d.body)})"
    if isinstance(d, RMult):
        return f"(rmult {show_derivation(fib, d.body)} {show(d.f)})"
    if isinstance(d, LMult):
        return f"(lmult {show(d.g)} {show_derivation(fib, d.body)})"
    return f"(rdiv {show_derivation(fib, d.body)} {show(d.f)} {show(d.g)})"


def show_judgment(fib: FreeBifibration, d: Derivation) -> str:
    judgment = fib.judgment(d)
    return (f"{show_formula(fib, judgment.lhs)} |-[{fib.base.show(judgment.base)}] "
            f"{show_formula(fib, judgment.rhs)}")
