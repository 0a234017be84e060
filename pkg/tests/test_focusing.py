"""
集中導出・正規化・極大探索・多重集中カットのテスト

p₂ の順序数論理式（ホムセットは単調写像と一対一）と
自由圏の小さな例を使う。
"""

import math
import os
import random
import sys

import pytest

# 相対インポートパスの設定
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from base.backends import SimplexCat
from base.errors import IllFormed, NonComposable, NotFP, NotStrictlyAlternating
from base.functor import identity_functor

from core.cut import cut
from core.derivation import RMult, identity, opcart
from core.fibration import FreeBifibration
from core.formula import Push
from core.sampling import random_composable_pair, random_derivation, random_extension
from core.strictify import strictify_formula
from enumeration.homset import homset
from focusing.alternating import alternate, ceil_formula, floor_formula
from focusing.maxsearch import MaxSearch, count_max, max_search
from focusing.mfcut import mf_cut
from focusing.multi import MAtom, _context, infer_multi, parse_multi, show_multi, uses_bimult
from focusing.rewrite import (
    STRATEGIES, from_bipoles, is_maximal, normalize, redexes, rewrite_step, to_bipoles, weight,
)
from focusing.strengthen import inv_seq, sequentialize, strengthen, to_derivation, to_multi
from focusing.weak import ceil, floor, weak_preimage, weak_views
from instances.seeds import MICRO_SEEDS, free_fork, free_line, free_pair, ord_formula, p2


def _ord_homset(fib, m, n):
    return homset(fib, ord_formula(fib, m), fib.base.identity(0), ord_formula(fib, n))


class TestAlternatingViews:
    """交代構文と弱集中の二つの見方"""

    def setup_method(self):
        self.fib = free_line()
        self.u = self.fib.base.parse_arrow('u')
        self.v = self.fib.base.parse_arrow('v')

    def test_ceil_floor(self):
        S = Push(self.v, Push(self.u, self.fib.atom('a')))
        A = alternate(S)

        assert ceil_formula(A) == S, "⌈A⌉ が元の論理式に戻りません"
        assert floor_formula(self.fib, A) == strictify_formula(self.fib, S)

    def test_weak_preimage_requires_strict(self):
        d = RMult(opcart(self.fib, self.u, self.fib.atom('a')), self.v)

        with pytest.raises(NotStrictlyAlternating):
            weak_preimage(self.fib, d)

    def test_weak_views_of_formula(self):
        S = Push(self.v, Push(self.u, self.fib.atom('a')))

        assert weak_views(self.fib, S) == (S, strictify_formula(self.fib, S))

    def test_weak_views_of_sequentialization(self):
        fib = p2()
        for p in _ord_homset(fib, 1, 2):
            w = inv_seq(fib, p)
            assert fib.judgment(ceil(fib, w)) == infer_multi(fib, p)
            assert fib.is_valid(floor(fib, w))


class TestMaximalSearch:
    """極大多重集中証明の列挙"""

    def test_counts_are_binomial(self):
        fib = p2()
        ident = fib.base.identity(0)
        for m in range(4):
            for n in range(1, 4):
                expected = math.comb(m + n - 1, m)
                actual = count_max(fib, ord_formula(fib, m), ident, ord_formula(fib, n))
                assert actual == expected, f"⟨{m}⟩ -> ⟨{n}⟩ の数が期待値と異なります。期待値: {expected}, 実際値: {actual}"

    def test_empty_homset(self):
        fib = p2()
        # ⟨1⟩ -> ⟨0⟩ の単調写像はない
        assert count_max(fib, ord_formula(fib, 1), fib.base.identity(0), ord_formula(fib, 0)) == 0

    def test_results_are_maximal_and_distinct(self):
        fib = p2()
        proofs = list(_ord_homset(fib, 2, 2))

        assert len(set(proofs)) == len(proofs), "列挙に重複があります"
        for p in proofs:
            assert is_maximal(fib, p), f"極大でない証明が列挙されました: {show_multi(fib, p)}"
            assert normalize(fib, p) == (p, 0)

    def test_memoization(self):
        fib = p2()
        searcher = MaxSearch(fib)
        S, ident, T = ord_formula(fib, 2), fib.base.identity(0), ord_formula(fib, 2)

        first = list(max_search(fib, S, ident, T, searcher=searcher))
        memo = len(searcher._memo)
        second = list(max_search(fib, S, ident, T, searcher=searcher))

        assert memo > 0, "メモが空です"
        assert first == second and len(searcher._memo) == memo, "二度目の探索でメモが増えました"

    def test_wrong_base_arrow(self):
        fib = p2()
        f = fib.base.parse_arrow('f')

        with pytest.raises(NonComposable):
            list(max_search(fib, ord_formula(fib, 1), f, ord_formula(fib, 1)))

    def test_requires_fp(self):
        fib = FreeBifibration(identity_functor(SimplexCat(2)), 'all', 'all')

        with pytest.raises(NotFP):
            MaxSearch(fib)

    def test_free_fork_distinguishes_parallel_arrows(self):
        fib = free_fork()
        a, c = fib.atom('a'), fib.atom('c')
        counts = {fib.base.show(h): count_max(fib, a, h, c) for h in fib.base.hom('a', 'c')}

        assert counts == {'u.v': 1, 'w': 1}, f"平行な射ごとの数が期待値と異なります。実際値: {counts}"

    def test_free_pair_separates_parallel_generators(self):
        fib = free_pair()
        p, q = fib.base.parse_arrow('p'), fib.base.parse_arrow('q')
        a, ident = fib.atom('a'), fib.base.identity('b')

        assert count_max(fib, Push(p, a), ident, Push(p, a)) == 1
        assert count_max(fib, Push(p, a), ident, Push(q, a)) == 0, "Push_p a ⊢ Push_q a は証明できないはずです"


class TestRewriting:
    """par ∪ gra 書き換え"""

    def _samples(self, count, seed):
        rng = random.Random(seed)
        for i in range(count):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            yield fib, to_multi(fib, random_derivation(fib, rng, depth=6))

    def test_weight_decreases(self):
        for fib, m in self._samples(40, 1):
            current = m
            for rule, pos in redexes(fib, current):
                nxt = rewrite_step(fib, current, rule, pos)
                assert nxt is not None, f"{rule}@{pos} が適用できません"
                assert weight(fib, nxt) < weight(fib, current), f"{rule}@{pos} で重みが減りません"
                assert infer_multi(fib, nxt) == infer_multi(fib, current), "書き換えで判断が変わりました"

    def test_strategies_agree(self):
        for fib, m in self._samples(40, 2):
            normal, _ = normalize(fib, m, 'bottom_up')
            for strategy in STRATEGIES:
                result, _ = normalize(fib, m, strategy, seed=9)
                assert result == normal, f"{strategy} の正規形が bottom_up と異なります"
            assert is_maximal(fib, normal)

    def test_one_step_rewrites_join(self):
        for fib, m in self._samples(40, 3):
            normal, _ = normalize(fib, m)
            for rule, pos in redexes(fib, m):
                joined, _ = normalize(fib, rewrite_step(fib, m, rule, pos))
                assert joined == normal, f"{rule}@{pos} の後の正規形が元の正規形と異なります: {show_multi(fib, m)}"

    def test_normalize_is_idempotent(self):
        for fib, m in self._samples(40, 4):
            normal, _ = normalize(fib, m)
            assert normalize(fib, normal) == (normal, 0), f"正規形がさらに書き換わります: {show_multi(fib, normal)}"

    def test_bipole_view_round_trip(self):
        fib = p2()
        for p in _ord_homset(fib, 2, 3):
            assert from_bipoles(to_bipoles(fib, p)) == p, f"バイポール表示から戻りません: {show_multi(fib, p)}"

    def test_unknown_strategy(self):
        fib = p2()
        proof = next(iter(_ord_homset(fib, 1, 1)))

        with pytest.raises(IllFormed):
            normalize(fib, proof, 'sideways')

    def test_normalize_requires_fp(self):
        fib = FreeBifibration(identity_functor(SimplexCat(2)), 'all', 'all')
        m = MAtom(fib.domain.identity(1))

        with pytest.raises(NotFP):
            normalize(fib, m)


class TestStrengthenAndSequentialize:
    """強化と逐次化"""

    def test_round_trip_through_derivations(self):
        fib = p2()
        for p in _ord_homset(fib, 2, 2):
            back, _ = normalize(fib, to_multi(fib, to_derivation(fib, p)))
            assert back == p, f"導出を経由して正規形に戻りません: {show_multi(fib, p)}"

    def test_strengthen_inverts_inv_seq(self):
        fib = p2()
        for p in _ord_homset(fib, 1, 3):
            assert normalize(fib, strengthen(fib, inv_seq(fib, p)))[0] == p

    def test_focused_sequentializations(self):
        fib = p2()
        for p in _ord_homset(fib, 2, 2):
            pieces = sequentialize(fib, p, 'foc')
            assert pieces, "逐次化が空です"
            assert all(not uses_bimult(s) for s in pieces), "BiMult が残っています"
            assert all(normalize(fib, s)[0] == p for s in pieces), "逐次化が正規形を変えます"

    def test_inversion_sequentializations_have_same_ceiling_judgment(self):
        fib = p2()
        for p in _ord_homset(fib, 1, 2):
            for mode in ('inv', 'all'):
                for w in sequentialize(fib, p, mode):
                    assert fib.judgment(ceil(fib, w)) == infer_multi(fib, p)

    def test_unknown_mode(self):
        fib = p2()
        proof = next(iter(_ord_homset(fib, 1, 1)))

        with pytest.raises(IllFormed):
            sequentialize(fib, proof, 'sideways')


class TestMultiSyntax:
    """多重集中導出の S 式"""

    def test_show_parse(self):
        fib = p2()
        for p in _ord_homset(fib, 2, 3):
            text = show_multi(fib, p)
            assert parse_multi(fib, text) == p, f"'{text}' を読み戻せません"
            assert text.startswith('(m-')

    def test_atom(self):
        fib = p2()

        assert show_multi(fib, MAtom(fib.domain.identity('*'))) == '(m-ax id:*)'


class TestMultifocusedCut:
    """多重集中カット"""

    def test_matches_extensional_cut(self):
        rng = random.Random(4)
        for i in range(30):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            a, b = random_composable_pair(fib, rng)
            expected, _ = normalize(fib, to_multi(fib, cut(fib, a, b)))
            actual = mf_cut(fib, to_multi(fib, a), to_multi(fib, b))
            assert actual == expected, f"sample {i}: mf_cut が外延的な合成と一致しません"

    def test_closed_under_homsets(self):
        fib = p2()
        targets = set(_ord_homset(fib, 1, 2))
        for p in _ord_homset(fib, 1, 2):
            for q in _ord_homset(fib, 2, 2):
                assert mf_cut(fib, p, q) in targets, "合成がホムセットに入りません"

    def test_identity_is_neutral(self):
        fib = p2()
        S = ord_formula(fib, 2)
        ident = to_multi(fib, identity(fib, S))
        for p in _ord_homset(fib, 2, 2):
            assert mf_cut(fib, ident, p) == p and mf_cut(fib, p, ident) == p

    def test_associative(self):
        fib = p2()
        firsts, seconds, thirds = _ord_homset(fib, 1, 2), _ord_homset(fib, 2, 2), _ord_homset(fib, 2, 3)
        for p in firsts:
            for q in seconds:
                for r in thirds:
                    left = mf_cut(fib, mf_cut(fib, p, q), r)
                    right = mf_cut(fib, p, mf_cut(fib, q, r))
                    assert left == right, f"結合律が成り立ちません: {show_multi(fib, left)} != {show_multi(fib, right)}"

    def test_associative_on_micro_seeds(self):
        rng = random.Random(8)
        for i in range(30):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            a, b = random_composable_pair(fib, rng)
            c = random_extension(fib, rng, fib.judgment(b).rhs)
            p, q, r = (to_multi(fib, d) for d in (a, b, c))
            assert mf_cut(fib, mf_cut(fib, p, q), r) == mf_cut(fib, p, mf_cut(fib, q, r)), f"sample {i}: 結合律が成り立ちません"

    def test_mismatch(self):
        fib = p2()
        p = next(iter(_ord_homset(fib, 1, 2)))

        with pytest.raises(NonComposable):
            mf_cut(fib, p, p)


class TestJudgmentCache:
    """判断推論キャッシュの上限"""

    def test_cache_stays_within_limit(self, monkeypatch):
        monkeypatch.setenv('BIFIB_CACHE_SIZE', '8')
        fib = p2()
        proofs = list(_ord_homset(fib, 2, 3))
        judgments = [infer_multi(fib, p) for p in proofs]
        cache = _context(fib)._cache

        assert cache.maxsize == 8, f"キャッシュ上限が期待値と異なります。期待値: 8, 実際値: {cache.maxsize}"
        assert 0 < len(cache) <= 8, f"キャッシュが上限を超えています。実際値: {len(cache)}"
        assert [infer_multi(fib, p) for p in proofs] == judgments, "追い出し後に判断が変わりました"
