"""
厳密化（strictification）

論理式の極大な Push/Pull ブロックを合成射一本に潰し、
θ_S : S ⊢_{Id} ⌊S⌋ と θ_S⁻¹ を構成する。導出には
⌊α⌋ = θ_S⁻¹ · α · θ_T で作用する。
"""

from typing import List, Tuple

from base.category import Arrow

from .cut import cut
from .derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from .fibration import FreeBifibration
from .formula import Atom, Formula, Pull, Push


def push_block(S: Push) -> Tuple[List[Arrow], Formula]:
    """極大な Push ブロック (f0..fn)（f0 が最内）と本体"""
    arrows = []
    while isinstance(S, Push):
        arrows.append(S.arrow)
        S = S.body
    arrows.reverse()
    return arrows, S


def pull_block(S: Pull) -> Tuple[List[Arrow], Formula]:
    """極大な Pull ブロック (g0..gn)（g0 が最外）と本体"""
    arrows = []
    while isinstance(S, Pull):
        arrows.append(S.arrow)
        S = S.body
    return arrows, S


def ldiv_chain(fib: FreeBifibration, pi: List[Arrow], g: Arrow, body: Derivation) -> Derivation:
    """f_n\\_g(f_{n-1}\\_{f_n g}(…f_0\\_{f_1…f_n g} α))"""
    suffixes = [g]
    for f in reversed(pi[1:]):
        suffixes.append(fib.compose(f, suffixes[-1]))
    # suffixes[j] は π の後ろ j 本と g の合成
    result = body
    for i, f in enumerate(pi):
        result = LDiv(f, suffixes[len(pi) - 1 - i], result)
    return result


def rdiv_chain(fib: FreeBifibration, sigma: List[Arrow], body: Derivation) -> Derivation:
    """α を g_n, …, g_0 の順に右除算する（最外の除算の基底は恒等射）"""
    prefixes = [fib.base.identity(sigma[0].dom)]
    for g in sigma[:-1]:
        prefixes.append(fib.compose(prefixes[-1], g))
    result = body
    for k in range(len(sigma) - 1, -1, -1):
        result = RDiv(result, prefixes[k], sigma[k])
    return result


def strictify_formula(fib: FreeBifibration, S: Formula) -> Formula:
    if isinstance(S, Atom):
        return S
    if isinstance(S, Push):
        pi, body = push_block(S)
        return Push(fib.composite(pi, pi[0].dom), strictify_formula(fib, body))
    sigma, body = pull_block(S)
    return Pull(fib.composite(sigma, sigma[0].dom), strictify_formula(fib, body))


def strictify(fib: FreeBifibration, S: Formula) -> Tuple[Formula, Derivation, Derivation]:
    """
    (⌊S⌋, θ_S, θ_S⁻¹) を返す

    ⌊S⌋ は厳密交代で、θ_S : S ⊢_{Id} ⌊S⌋、θ_S⁻¹ : ⌊S⌋ ⊢_{Id} S。
    """
    if isinstance(S, Atom):
        ident = AtomAx(fib.domain.identity(S.obj))
        return S, ident, ident
    if isinstance(S, Push):
        pi, body = push_block(S)
        strict_body, theta_body, theta_body_inv = strictify(fib, body)
        composite = fib.composite(pi, pi[0].dom)
        strict = Push(composite, strict_body)
        theta = ldiv_chain(fib, pi, fib.base.identity(composite.cod), RMult(theta_body, composite))
        inner: Derivation = theta_body_inv
        for f in pi:
            inner = RMult(inner, f)
        theta_inv = LDiv(composite, fib.base.identity(composite.cod), inner)
        return strict, theta, theta_inv
    sigma, body = pull_block(S)
    strict_body, theta_body, theta_body_inv = strictify(fib, body)
    composite = fib.composite(sigma, sigma[0].dom)
    strict = Pull(composite, strict_body)
    inner = theta_body
    for g in reversed(sigma):
        inner = LMult(g, inner)
    theta = RDiv(inner, fib.base.identity(composite.dom), composite)
    theta_inv = rdiv_chain(fib, sigma, LMult(composite, theta_body_inv))
    return strict, theta, theta_inv


def strictify_derivation(fib: FreeBifibration, d: Derivation) -> Derivation:
    """⌊α⌋ = θ_S⁻¹ · α · θ_T"""
    judgment = fib.judgment(d)
    _, _, theta_inv = strictify(fib, judgment.lhs)
    _, theta, _ = strictify(fib, judgment.rhs)
    return cut(fib, cut(fib, theta_inv, d), theta)
