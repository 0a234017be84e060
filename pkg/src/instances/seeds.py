"""
名前付きシード（生成関手と射クラスの組）

    p2            1 -> ⟨2⟩、点を始対象 0 へ
    pomega(k)     1 -> ω（k で打ち切り）、点を 0 へ
    bnat          1 -> B(ℕ)
    ambisimplex(k) ℕ -> Δ（k で打ち切り）、P = epi, N = mono
    freeline      Id 上の自由圏 a -> b -> c
    freefork      Id 上の自由圏 a -> b -> c と a -> c
"""

import logging
import re
from typing import Callable, Dict, Tuple

from base.backends import DiscreteNat, FinPoset, FreeCat, MonoidNat, SimplexCat, interval, omega_chain, point
from base.category import Arrow
from base.errors import PresentationError
from base.functor import FunctorDef, identity_functor

from config.environment import get_search_config
from core.derivation import AtomAx, Derivation, LDiv, LMult, RDiv, RMult
from core.fibration import FreeBifibration
from core.formula import Formula, Pull, Push

logger = logging.getLogger(__name__)

SEED_NAMES = ('p2', 'pomega', 'bnat', 'ambisimplex', 'freeline', 'freefork', 'freepair')


def p2() -> FreeBifibration:
    return FreeBifibration(FunctorDef(point(), interval(), {'*': 0}), name='p2')


def pomega(level: int = None) -> FreeBifibration:
    level = level if level is not None else get_search_config()['max_level']
    return FreeBifibration(FunctorDef(point(), omega_chain(level), {'*': 0}), name=f'pomega({level})')


def bnat(max_value: int = 16) -> FreeBifibration:
    return FreeBifibration(FunctorDef(point(), MonoidNat(max_value), {'*': 0}), name='bnat')


def ambisimplex(level: int = None) -> FreeBifibration:
    """包含 i : ℕ -> Δ 上の自由 (epi, mono)-ファイブレーション"""
    level = level if level is not None else get_search_config()['max_level']
    functor = FunctorDef(DiscreteNat(level), SimplexCat(level), lambda n: n)
    return FreeBifibration(functor, 'epi', 'mono', name=f'ambisimplex({level})')


# --- 自由圏の小さな例（恒等関手上） ---

def free_line() -> FreeBifibration:
    """a -u-> b -v-> c"""
    graph = FreeCat(['a', 'b', 'c'], {'u': ('a', 'b'), 'v': ('b', 'c')})
    graph.name = 'free-line'
    return FreeBifibration(identity_functor(graph), name='freeline')


def free_fork() -> FreeBifibration:
    """a -u-> b、a -w-> c、b -v-> c（u·v と w は別の射）"""
    graph = FreeCat(['a', 'b', 'c'], {'u': ('a', 'b'), 'v': ('b', 'c'), 'w': ('a', 'c')})
    graph.name = 'free-fork'
    return FreeBifibration(identity_functor(graph), name='freefork')


def free_pair() -> FreeBifibration:
    """a -p-> b、a -q-> b（平行な生成子）、b -r-> c"""
    graph = FreeCat(['a', 'b', 'c'], {'p': ('a', 'b'), 'q': ('a', 'b'), 'r': ('b', 'c')})
    graph.name = 'free-pair'
    return FreeBifibration(identity_functor(graph), name='freepair')


MICRO_SEEDS = (free_line, free_fork, free_pair)


def omega_to_bnat(level: int, max_value: int = 16) -> FunctorDef:
    """ω -> B(ℕ)、f_i ↦ 1（歩道の変位を数える）"""
    chain, monoid = omega_chain(level), MonoidNat(max_value)
    return FunctorDef(chain, monoid, lambda x: 0, lambda a: monoid.arrow(a.cod - a.dom))


_SEED = re.compile(r'^([a-z0-9]+)(?:\((\d+)\))?$')

_FACTORIES: Dict[str, Callable[..., FreeBifibration]] = {
    'p2': p2,
    'pomega': pomega,
    'bnat': bnat,
    'ambisimplex': ambisimplex,
    'freeline': lambda level=None: free_line(),
    'freefork': lambda level=None: free_fork(),
    'freepair': lambda level=None: free_pair(),
}


def seed(name: str, level: int = None) -> FreeBifibration:
    """
    'p2'、'pomega(3)' のような名前からシードを作る

    Raises:
        PresentationError: 未知のシード名の場合
    """
    match = _SEED.match(name.strip())
    if not match or match.group(1) not in _FACTORIES:
        raise PresentationError(
            f"未知のシード '{name}' です",
            f"利用可能なシード: {', '.join(SEED_NAMES)}",
            "シード名を確認するか --functor で提示ファイルを渡してください",
        )
    key, arg = match.group(1), match.group(2)
    if arg is not None:
        level = int(arg)
    if key == 'p2':
        return p2()
    if key == 'bnat':
        return bnat() if level is None else bnat(level)
    return _FACTORIES[key](level)


# --- 図式の例：⟨3⟩ 上のジグザグ ---

def three_chain() -> FinPoset:
    """A < B < C、f : A -> B, g : B -> C, h = f·g"""
    poset = FinPoset(['A', 'B', 'C'], [('A', 'B'), ('B', 'C')],
                     {'f': ('A', 'B'), 'g': ('B', 'C'), 'h': ('A', 'C')})
    poset.name = 'three-chain'
    return poset


def zigzag_example() -> Tuple[FreeBifibration, Derivation]:
    """
    X -α-> Y を f に載せた関手上の導出

        Pull_f Push_f X ⊢_{Id_A} Pull_h Push_g Y
    """
    base = three_chain()
    domain = FreeCat(['X', 'Y'], {'alpha': ('X', 'Y')})
    f, g, h = (base.parse_arrow(name) for name in ('f', 'g', 'h'))
    functor = FunctorDef(domain, base, {'X': 'A', 'Y': 'B'}, {'alpha': f})
    fib = FreeBifibration(functor, name='zigzag-example')
    alpha = domain.parse_arrow('alpha')
    d = RDiv(LMult(f, LDiv(f, g, RMult(AtomAx(alpha), g))), base.identity('A'), h)
    fib.judgment(d)
    return fib, d


# --- 順序数の論理式 ---

def _f(fib: FreeBifibration) -> Arrow:
    return fib.base.parse_arrow('f')


def ord_formula(fib: FreeBifibration, n: int) -> Formula:
    """⟨n⟩ = (Pull_f Push_f)^n ∗（0 上）"""
    f = _f(fib)
    S: Formula = fib.atom('*')
    for _ in range(n):
        S = Pull(f, Push(f, S))
    return S


def ord_formula_prime(fib: FreeBifibration, n: int) -> Formula:
    """⟨n⟩' = Push_f (Pull_f Push_f)^n ∗（1 上）"""
    return Push(_f(fib), ord_formula(fib, n))


