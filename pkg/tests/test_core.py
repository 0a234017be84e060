"""
論理式・導出・カット・置換同値のテスト

自由圏 a -u-> b -v-> c（恒等関手上）と p₂ を主に使う。
"""

import os
import random
import sys

import pytest

# 相対インポートパスの設定
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from base.backends import SimplexCat
from base.errors import IllFormed, NonComposable, NotFP, ParseError, UndecidableConfiguration
from base.functor import identity_functor

from core.cut import cut, cut_all
from core.derivation import AtomAx, LDiv, RMult, counit, depth, identity, opcart, cart, pseudofunctor_witnesses, unit
from core.fibration import FreeBifibration
from core.formula import Atom, Pull, Push, connectives, is_strictly_alternating, is_subformula
from core.permeq import permeq_class, permeq_decide_bfs, permeq_neighbors
from core.sampling import random_composable_pair, random_derivation, random_extension
from core.search import count_permeq_classes, derivations
from core.sexpr import parse_derivation, parse_formula, show_derivation, show_formula, show_judgment
from core.strictify import strictify, strictify_derivation, strictify_formula
from core.transport import transport_derivation, transport_fibration, transport_formula
from enumeration.homset import decide, decide_equal, homset
from instances.seeds import MICRO_SEEDS, free_line, omega_to_bnat, ord_formula, p2, pomega
from instances.trees import walk_displacement
from zigzag.cells import L_PULL, L_PUSH, R_PULL, R_PUSH, decompose


def _premises(fib, d):
    """d 自身を含む各部分導出の判断"""
    while True:
        yield fib.judgment(d)
        if isinstance(d, AtomAx):
            return
        d = d.body


class TestFormulas:
    """論理式の形成規則"""

    def setup_method(self):
        self.fib = free_line()
        self.u = self.fib.base.parse_arrow('u')
        self.v = self.fib.base.parse_arrow('v')

    def test_ref(self):
        a = self.fib.atom('a')
        pushed = self.fib.push(self.u, a)
        pulled = self.fib.pull(self.v, self.fib.atom('c'))

        assert a.ref == 'a', f"原子の載る対象が期待値と異なります。期待値: a, 実際値: {a.ref}"
        assert pushed.ref == 'b', f"Push の載る対象が期待値と異なります。期待値: b, 実際値: {pushed.ref}"
        assert pulled.ref == 'b', f"Pull の載る対象が期待値と異なります。期待値: b, 実際値: {pulled.ref}"

    def test_push_requires_matching_object(self):
        with pytest.raises(IllFormed):
            self.fib.push(self.v, self.fib.atom('a'))

    def test_unknown_atom(self):
        with pytest.raises(IllFormed):
            self.fib.atom('z')

    def test_check_formula_rejects_forged_atom(self):
        with pytest.raises(IllFormed):
            self.fib.check_formula(Atom('a', 'b'))

    def test_show_parse(self):
        text = '(pull u (push u (atom a)))'
        S = parse_formula(self.fib, text)

        assert S == Pull(self.u, Push(self.u, Atom('a', 'a')))
        assert show_formula(self.fib, S) == text, f"表示が期待値と異なります。期待値: {text}, 実際値: {show_formula(self.fib, S)}"

    def test_parse_errors(self):
        for text in ('(atom a', '(frob a)', '', '(atom a) (atom b)'):
            with pytest.raises(ParseError):
                parse_formula(self.fib, text)

    def test_push_class_is_enforced(self):
        fib = FreeBifibration(identity_functor(SimplexCat(3)), 'epi', 'mono')
        delta = fib.base.delta(0, 1)

        with pytest.raises(IllFormed):
            fib.push(delta, fib.atom(1))
        assert fib.pull(delta, fib.atom(2)).ref == 1


class TestDerivations:
    """導出と判断推論"""

    def setup_method(self):
        self.fib = free_line()
        self.base = self.fib.base
        self.u = self.base.parse_arrow('u')
        self.v = self.base.parse_arrow('v')
        self.a = self.fib.atom('a')

    def test_identity(self):
        S = self.fib.pull(self.u, self.fib.push(self.u, self.a))
        judgment = self.fib.judgment(identity(self.fib, S))

        assert judgment.lhs == S and judgment.rhs == S, "恒等導出の両辺が S になっていません"
        assert self.base.is_identity(judgment.base), f"恒等導出の基底が恒等射ではありません: {judgment.base}"

    def test_lifts(self):
        op = self.fib.judgment(opcart(self.fib, self.u, self.a))
        ca = self.fib.judgment(cart(self.fib, self.v, self.fib.atom('c')))

        assert op.base == self.u and op.rhs == Push(self.u, self.a)
        assert ca.base == self.v and ca.lhs == Pull(self.v, self.fib.atom('c'))

    def test_unit_counit(self):
        eta = self.fib.judgment(unit(self.fib, self.u, self.a))
        eps = self.fib.judgment(counit(self.fib, self.u, self.fib.atom('b')))

        assert eta.rhs == Pull(self.u, Push(self.u, self.a))
        assert eps.lhs == Push(self.u, Pull(self.u, self.fib.atom('b')))
        assert self.base.is_identity(eta.base) and self.base.is_identity(eps.base)

    def test_bad_factorization(self):
        d = LDiv(self.u, self.v, AtomAx(self.base.identity('a')))

        with pytest.raises(IllFormed):
            self.fib.judgment(d)
        assert not self.fib.is_valid(d)

    def test_show_parse_derivation(self):
        text = '(rmult (rmult (ax id:a) u) v)'
        d = parse_derivation(self.fib, text)

        assert show_derivation(self.fib, d) == text
        assert show_judgment(self.fib, d) == '(atom a) |-[u.v] (push v (push u (atom a)))'

    def test_pseudofunctor_witnesses(self):
        witnesses = pseudofunctor_witnesses(self.fib, self.u, self.v, self.a, self.fib.atom('c'))
        uv = self.base.compose(self.u, self.v)

        assert set(witnesses) == {'pushpush', 'pullpull', 'pushid', 'pullid'}
        forward, backward = witnesses['pushpush']
        assert self.fib.judgment(forward).lhs == Push(self.v, Push(self.u, self.a))
        assert self.fib.judgment(forward).rhs == Push(uv, self.a)
        assert self.fib.judgment(backward).lhs == Push(uv, self.a)
        forward, _ = witnesses['pullpull']
        assert self.fib.judgment(forward).rhs == Pull(uv, self.fib.atom('c'))

    def test_pseudofunctor_witnesses_are_inverse(self):
        witnesses = pseudofunctor_witnesses(self.fib, self.u, self.v, self.a, self.fib.atom('c'))
        for key, (forward, backward) in witnesses.items():
            lhs = self.fib.judgment(forward).lhs
            assert decide_equal(self.fib, cut(self.fib, forward, backward), identity(self.fib, lhs)), \
                f"{key} の往復が恒等導出に置換同値ではありません"

    def test_judgment_cache_is_bounded(self, monkeypatch):
        monkeypatch.setenv('BIFIB_CACHE_SIZE', '8')
        fib = free_line()
        rng = random.Random(29)
        samples = [random_derivation(fib, rng, depth=6) for _ in range(20)]
        judgments = [fib.judgment(d) for d in samples]

        assert len(fib._judgments) <= 8, f"判断キャッシュが上限を超えています。実際値: {len(fib._judgments)}"
        assert [fib.judgment(d) for d in samples] == judgments, "追い出し後に判断が変わりました"

    def test_identity_is_eta_expanded(self):
        S = self.fib.pull(self.u, self.fib.push(self.u, self.a))
        d = identity(self.fib, S)
        delta, stack = decompose(self.fib, d)
        kinds = [c.kind for c in stack.cells]

        assert not isinstance(d, AtomAx), "複合論理式の恒等導出が公理になっています"
        assert depth(d) == 2 * len(connectives(S)), f"η 展開の規則数が期待値と異なります。期待値: 4, 実際値: {depth(d)}"
        assert kinds == [R_PUSH, L_PUSH, L_PULL, R_PULL], f"η 展開のセルが期待値と異なります。実際値: {kinds}"
        assert delta == self.fib.domain.identity('a'), "η 展開の公理が原子の恒等射ではありません"

    def test_subformula_property(self):
        rng = random.Random(19)
        for i in range(30):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            d = random_derivation(fib, rng, depth=6)
            judgment = fib.judgment(d)
            for premise in _premises(fib, d):
                assert is_subformula(premise.lhs, judgment.lhs), f"sample {i}: 前提の左辺が部分論理式ではありません"
                assert is_subformula(premise.rhs, judgment.rhs), f"sample {i}: 前提の右辺が部分論理式ではありません"

    def test_subformula_property_of_search(self):
        fib = p2()
        S = ord_formula(fib, 2)
        found = derivations(fib, S, fib.base.identity(0), S)

        assert found, "⟨2⟩ -> ⟨2⟩ の導出が見つかりません"
        for d in found:
            for premise in _premises(fib, d):
                assert is_subformula(premise.lhs, S) and is_subformula(premise.rhs, S), "探索結果が部分論理式性を満たしません"


class TestCut:
    """カット"""

    def setup_method(self):
        self.fib = free_line()
        self.u = self.fib.base.parse_arrow('u')
        self.v = self.fib.base.parse_arrow('v')
        self.a = self.fib.atom('a')

    def test_cut_composes_bases(self):
        first = opcart(self.fib, self.u, self.a)
        second = LDiv(self.u, self.v, RMult(opcart(self.fib, self.u, self.a), self.v))
        judgment = self.fib.judgment(cut(self.fib, first, second))

        assert judgment.base == self.fib.base.compose(self.u, self.v), f"カットの基底が期待値と異なります: {judgment.base}"
        assert judgment.lhs == self.a

    def test_unit_then_cart_is_opcart(self):
        pushed = Push(self.u, self.a)
        d = cut(self.fib, unit(self.fib, self.u, self.a), cart(self.fib, self.u, pushed))

        assert self.fib.judgment(d) == self.fib.judgment(opcart(self.fib, self.u, self.a))
        assert decide_equal(self.fib, d, opcart(self.fib, self.u, self.a)), "η と cart のカットが opcart になりません"

    def test_cut_mismatch(self):
        d = opcart(self.fib, self.u, self.a)

        with pytest.raises(NonComposable):
            cut(self.fib, d, d)

    def test_identity_is_neutral(self):
        rng = random.Random(11)
        for _ in range(20):
            d = random_derivation(self.fib, rng, depth=4)
            judgment = self.fib.judgment(d)
            assert decide_equal(self.fib, cut(self.fib, identity(self.fib, judgment.lhs), d), d)
            assert decide_equal(self.fib, cut(self.fib, d, identity(self.fib, judgment.rhs)), d)

    def test_cut_is_associative(self):
        rng = random.Random(13)
        for i in range(20):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            a, b = random_composable_pair(fib, rng)
            c = random_extension(fib, rng, fib.judgment(b).rhs)
            left = cut(fib, cut(fib, a, b), c)
            right = cut(fib, a, cut(fib, b, c))
            assert decide_equal(fib, left, right), f"sample {i}: カットの結合律が成り立ちません"

    def test_cut_all_matches_nested_cut(self):
        rng = random.Random(3)
        a, b = random_composable_pair(self.fib, rng)
        c = identity(self.fib, self.fib.judgment(b).rhs)

        assert cut_all(self.fib, a, b, c) == cut(self.fib, cut(self.fib, a, b), c)


class TestStrictify:
    """厳密化"""

    def setup_method(self):
        self.fib = free_line()
        self.u = self.fib.base.parse_arrow('u')
        self.v = self.fib.base.parse_arrow('v')
        self.a = self.fib.atom('a')
        self.S = Push(self.v, Push(self.u, self.a))

    def test_strict_formula(self):
        strict = strictify_formula(self.fib, self.S)

        assert strict == Push(self.fib.base.compose(self.u, self.v), self.a), f"厳密形が期待値と異なります: {strict}"
        assert is_strictly_alternating(strict)
        assert not is_strictly_alternating(self.S)

    def test_theta_is_isomorphism(self):
        strict, theta, theta_inv = strictify(self.fib, self.S)

        assert self.fib.judgment(theta).lhs == self.S and self.fib.judgment(theta).rhs == strict
        assert self.fib.judgment(theta_inv).lhs == strict and self.fib.judgment(theta_inv).rhs == self.S
        assert decide_equal(self.fib, cut(self.fib, theta, theta_inv), identity(self.fib, self.S))
        assert decide_equal(self.fib, cut(self.fib, theta_inv, theta), identity(self.fib, strict))

    def test_strictify_derivation(self):
        d = RMult(opcart(self.fib, self.u, self.a), self.v)
        judgment = self.fib.judgment(strictify_derivation(self.fib, d))

        assert judgment.rhs == strictify_formula(self.fib, self.S)
        assert judgment.base == self.fib.judgment(d).base


class TestPermutationEquivalence:
    """置換同値と BFS"""

    def test_neighbors_share_judgment(self):
        fib = free_line()
        rng = random.Random(5)
        for _ in range(20):
            d = random_derivation(fib, rng, depth=5)
            for n in permeq_neighbors(fib, d):
                assert fib.judgment(n) == fib.judgment(d), "隣接導出の判断が変わっています"

    def test_class_contains_seed(self):
        fib = free_line()
        u = fib.base.parse_arrow('u')
        d = unit(fib, u, fib.atom('a'))
        members = permeq_class(fib, d)

        assert members[0] == d, "類の先頭が元の導出ではありません"
        assert all(permeq_decide_bfs(fib, d, m) for m in members)

    def test_counts_on_interval(self):
        fib = p2()
        ident = fib.base.identity(0)
        # ⟨1⟩ -> ⟨2⟩ の単調写像は 2 個
        count = count_permeq_classes(fib, ord_formula(fib, 1), ident, ord_formula(fib, 2))

        assert count == 2, f"置換同値類の数が期待値と異なります。期待値: 2, 実際値: {count}"

    def test_enumeration_is_nonempty_when_provable(self):
        fib = p2()
        found = derivations(fib, ord_formula(fib, 0), fib.base.identity(0), ord_formula(fib, 1))

        assert found, "⟨0⟩ -> ⟨1⟩ の導出が見つかりません"


class TestDecidability:
    """等価判定手段の選択"""

    def _undecidable(self):
        simplex = SimplexCat(2)
        simplex.locally_finite = False
        return FreeBifibration(identity_functor(simplex), 'all', 'all')

    def test_undecidable_configuration(self):
        fib = self._undecidable()
        d = identity(fib, fib.atom(1))

        with pytest.raises(UndecidableConfiguration):
            decide(fib, d, d)

    def test_homset_requires_fp_or_finite(self):
        fib = self._undecidable()

        with pytest.raises(NotFP):
            homset(fib, fib.atom(1), fib.base.identity(1), fib.atom(1))

    def test_bfs_mode_when_not_fp(self):
        fib = FreeBifibration(identity_functor(SimplexCat(2)), 'all', 'all')
        d = identity(fib, fib.atom(1))

        equal, mode = decide(fib, d, d)
        assert equal and mode == 'bfs', f"判定手段が期待値と異なります。期待値: bfs, 実際値: {mode}"


class TestTransport:
    """関手に沿った輸送"""

    def test_displacement_is_preserved(self):
        fib = pomega(3)
        functor = omega_to_bnat(3)
        target = transport_fibration(fib, functor)
        f0 = fib.base.parse_arrow('f_0')
        d = unit(fib, f0, fib.atom('*'))

        moved = transport_derivation(target, functor, d)
        judgment = target.judgment(moved)

        assert judgment.rhs == transport_formula(target, functor, fib.judgment(d).rhs)
        assert walk_displacement(judgment.rhs) == 0, f"変位が期待値と異なります。期待値: 0, 実際値: {walk_displacement(judgment.rhs)}"
