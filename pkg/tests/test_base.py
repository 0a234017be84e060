"""
基底圏バックエンドのテスト

- 合成は図式順（a·b は a の後に b）
- 除算・フィラーは hom の総当たりと一致する
- 例外はエラー3要素（what / why / how）を持つ
"""

import itertools
import json
import os
import sys

import pytest

# 相対インポートパスの設定
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from base.backends import DiscreteNat, FinPoset, FreeCat, MonoidNat, SimplexCat, interval, omega_chain, point
from base.cache import BoundedCache
from base.category import Arrow
from base.errors import BifibError, IllFormed, NonComposable, PresentationError, SquareNotCommuting
from base.functor import FunctorDef, identity_functor
from base.presentation import load_functor, parse_functor, parse_poset, parse_presentation


def _max_fillers(cat, cls):
    """クラス内の射だけで組んだ可換四角形 f·y = x·k のフィラーの最大個数"""
    arrows = [a for x in cat.objects() for y in cat.objects() for a in cat.hom(x, y) if cls.contains(a)]
    most = 0
    for f in arrows:
        for y in arrows:
            if f.cod != y.dom:
                continue
            h = cat.compose(f, y)
            for x in arrows:
                for k in cat.left_divisors(x, h):
                    if cls.contains(k):
                        most = max(most, len(cat.fillers(f, x, y, k)))
    return most


class TestBifibError:
    """例外の3要素"""

    def test_message_has_three_parts(self):
        error = IllFormed("何が", "なぜ", "どうする")

        assert str(error) == "何が - なぜ - どうする", f"メッセージが期待値と異なります。実際値: {error}"
        assert error.code == 'IllFormed', f"コードが期待値と異なります。期待値: IllFormed, 実際値: {error.code}"

    def test_to_dict_is_json_serializable(self):
        data = NonComposable("合成できません", "端点が違います", "順序を確認").to_dict()

        assert set(data) == {'error', 'message', 'what', 'why', 'how'}, f"キーが期待値と異なります。実際値: {set(data)}"
        assert json.loads(json.dumps(data, ensure_ascii=False)) == data

    def test_all_errors_share_base(self):
        for cls in (IllFormed, NonComposable, PresentationError, SquareNotCommuting):
            assert issubclass(cls, BifibError), f"{cls.__name__} が BifibError を継承していません"


class TestBoundedCache:
    """上限付きのメモ表"""

    def test_evicts_least_recently_used(self):
        cache = BoundedCache(2)
        cache.put('a', 1)
        cache.put('b', 2)
        cache.get('a')
        cache.put('c', 3)

        assert len(cache) == 2, f"件数が期待値と異なります。期待値: 2, 実際値: {len(cache)}"
        assert 'a' in cache and 'c' in cache and 'b' not in cache, "最も古く参照された項目が捨てられていません"

    def test_zero_disables(self):
        cache = BoundedCache(0)
        cache.put('a', 1)

        assert len(cache) == 0 and cache.get('a') is None


class TestFreeCat:
    """自由圏"""

    def setup_method(self):
        self.cat = FreeCat(['a', 'b', 'c'], {'u': ('a', 'b'), 'v': ('b', 'c'), 'w': ('a', 'c')})

    def test_compose_is_diagrammatic(self):
        u, v = self.cat.parse_arrow('u'), self.cat.parse_arrow('v')
        uv = self.cat.compose(u, v)

        assert uv.payload == ('u', 'v'), f"合成の語が期待値と異なります。期待値: ('u', 'v'), 実際値: {uv.payload}"
        assert self.cat.show(uv) == 'u.v', f"表示が期待値と異なります。期待値: u.v, 実際値: {self.cat.show(uv)}"
        assert self.cat.parse_arrow('u.v') == uv

    def test_identity_show(self):
        assert self.cat.show(self.cat.identity('b')) == 'id:b'
        assert self.cat.parse_arrow('id:b') == self.cat.identity('b')

    def test_non_composable(self):
        u, w = self.cat.parse_arrow('u'), self.cat.parse_arrow('w')

        with pytest.raises(NonComposable):
            self.cat.compose(u, w)

    def test_hom_distinguishes_parallel_words(self):
        hom = [self.cat.show(a) for a in self.cat.hom('a', 'c')]

        assert sorted(hom) == ['u.v', 'w'], f"hom(a, c) が期待値と異なります。期待値: ['u.v', 'w'], 実際値: {hom}"

    def test_divisors(self):
        u, v = self.cat.parse_arrow('u'), self.cat.parse_arrow('v')
        uv = self.cat.compose(u, v)

        assert self.cat.left_divisors(u, uv) == [v]
        assert self.cat.right_divisors(uv, v) == [u]
        assert self.cat.left_divisors(u, self.cat.parse_arrow('w')) == []

    def test_le_fact(self):
        u, v = self.cat.parse_arrow('u'), self.cat.parse_arrow('v')
        uv = self.cat.compose(u, v)

        assert self.cat.le_fact(u, v, u, v), "(u, v) ≤ (u, v) が成り立ちません"
        assert self.cat.le_fact(self.cat.identity('a'), uv, u, v)

    def test_is_fp(self):
        assert self.cat.is_fp(), "自由圏は FP のはずです"

    def test_divisors_match_brute_force(self):
        pair = FreeCat(['a', 'b', 'c'], {'p': ('a', 'b'), 'q': ('a', 'b'), 'r': ('b', 'c')})
        for cat in (self.cat, pair):
            arrows = [h for x in cat.objects() for y in cat.objects() for h in cat.hom(x, y)]
            for a in arrows:
                for h in arrows:
                    left = [g for g in cat.hom(a.cod, h.cod) if a.dom == h.dom and cat.compose(a, g) == h]
                    right = [g for g in cat.hom(h.dom, a.dom) if a.cod == h.cod and cat.compose(g, a) == h]
                    assert cat.left_divisors(a, h) == left, f"左除算が総当たりと一致しません: {cat.show(a)} \\ {cat.show(h)}"
                    assert cat.right_divisors(h, a) == right, f"右除算が総当たりと一致しません: {cat.show(h)} / {cat.show(a)}"

    def test_fillers_are_unique(self):
        assert _max_fillers(self.cat, self.cat.arrow_class('all')) == 1, "可換四角形のフィラーが一意ではありません"

    def test_unknown_endpoint(self):
        with pytest.raises(PresentationError):
            FreeCat(['a'], {'u': ('a', 'z')})


class TestFinPoset:
    """有限前順序"""

    def test_interval(self):
        cat = interval()
        f = cat.parse_arrow('f')

        assert (f.dom, f.cod) == (0, 1), f"f の端点が期待値と異なります。実際値: {(f.dom, f.cod)}"
        assert cat.show(f) == 'f'
        assert cat.hom(1, 0) == [], "1 -> 0 の射は存在しないはずです"

    def test_omega_chain_generators(self):
        cat = omega_chain(3)
        names = [cat.show(g) for g in cat.generators()]

        assert names == ['f_0', 'f_1', 'f_2'], f"生成子が期待値と異なります。実際値: {names}"
        assert cat.le(0, 3)

    def test_thin(self):
        cat = omega_chain(3)
        composite = cat.compose(cat.parse_arrow('f_0'), cat.parse_arrow('f_1'))

        assert composite == Arrow(0, 2, ()), f"薄い圏の合成が期待値と異なります。実際値: {composite}"
        assert cat.show(composite) == '0<=2'

    def test_named_arrow_must_be_ordered(self):
        with pytest.raises(PresentationError):
            FinPoset([0, 1], [(0, 1)], {'g': (1, 0)})


class TestSimplexCat:
    """単体圏"""

    def setup_method(self):
        self.cat = SimplexCat(4)

    def test_hom_sizes_are_multisets(self):
        for m, n in itertools.product(range(4), range(1, 4)):
            expected = len(list(itertools.combinations_with_replacement(range(n), m)))
            actual = len(self.cat.hom(m, n))
            assert actual == expected, f"|Δ({m},{n})| が期待値と異なります。期待値: {expected}, 実際値: {actual}"

    def test_sigma_delta(self):
        sigma = self.cat.sigma(0, 2)
        delta = self.cat.delta(1, 2)

        assert sigma.payload == (0, 0, 1), f"σ_0^2 の像が期待値と異なります。実際値: {sigma.payload}"
        assert delta.payload == (0, 2), f"δ_1^2 の像が期待値と異なります。実際値: {delta.payload}"
        assert self.cat.show(sigma) == 's0^2'
        assert self.cat.show(delta) == 'd1^2'

    def test_simplicial_identity(self):
        # δ_i · σ_i = id
        for n in range(1, 4):
            for i in range(n):
                composite = self.cat.compose(self.cat.delta(i, n), self.cat.sigma(i, n))
                assert self.cat.is_identity(composite), f"δ_{i}^{n}·σ_{i}^{n} が恒等射になりません"

    def test_sigma_out_of_range(self):
        with pytest.raises(PresentationError):
            self.cat.sigma(0, 4)

    def test_show_parse(self):
        for token in ('s1^2', 'd0^1', 'map:0,0>2', 'id:3'):
            assert self.cat.show(self.cat.parse_arrow(token)) == token, f"'{token}' の表示が一致しません"

    def test_epi_mono_are_fp(self):
        assert self.cat.is_fp('epi') and self.cat.is_fp('mono')
        assert not self.cat.is_fp('all'), "Δ 全体は FP ではありません"

    def test_divisors_match_brute_force(self):
        a = self.cat.sigma(0, 2)
        for h in self.cat.hom(3, 3):
            brute = [g for g in self.cat.hom(2, 3) if self.cat.compose(a, g) == h]
            assert self.cat.left_divisors(a, h) == brute, f"左除算が総当たりと一致しません: {h}"

    def test_right_divisors_match_brute_force(self):
        cat = SimplexCat(3)
        arrows = [a for m in range(4) for n in range(4) for a in cat.hom(m, n)]
        for b in arrows:
            for h in arrows:
                if h.cod != b.cod:
                    continue
                brute = [g for g in cat.hom(h.dom, b.dom) if cat.compose(g, b) == h]
                assert cat.right_divisors(h, b) == brute, f"右除算が総当たりと一致しません: {cat.show(h)} / {cat.show(b)}"

    def test_fillers_are_unique_for_fp_classes(self):
        cat = SimplexCat(3)
        for name in ('epi', 'mono'):
            assert _max_fillers(cat, cat.arrow_class(name)) == 1, f"{name} の可換四角形のフィラーが一意ではありません"

    def test_all_class_has_ambiguous_fillers(self):
        cat = SimplexCat(3)

        assert _max_fillers(cat, cat.arrow_class('all')) > 1, "Δ 全体には複数のフィラーを持つ四角形があるはずです"

    def test_fillers_require_commuting_square(self):
        f = self.cat.delta(0, 1)
        x = self.cat.identity(1)
        with pytest.raises(SquareNotCommuting):
            self.cat.fillers(f, x, self.cat.identity(2), self.cat.sigma(0, 1))


class TestMonoidNat:
    """加法モノイド B(ℕ)"""

    def test_arrows_are_numbers(self):
        cat = MonoidNat()
        two = cat.compose(cat.arrow(1), cat.parse_arrow('f'))

        assert cat.show(two) == '2', f"1 + 1 の表示が期待値と異なります。実際値: {cat.show(two)}"
        assert cat.left_divisors(cat.arrow(1), cat.arrow(3)) == [cat.arrow(2)]
        assert cat.left_divisors(cat.arrow(3), cat.arrow(1)) == []


class TestPresentation:
    """提示ファイルと関手ファイル"""

    def test_builtin_line(self):
        cat = parse_presentation("simplex 3\n")

        assert isinstance(cat, SimplexCat) and cat.max_n == 3

    def test_graph_presentation(self):
        cat = parse_presentation("# 線\nobjects: a b\narrow u: a -> b\n")

        assert isinstance(cat, FreeCat)
        assert [cat.show(g) for g in cat.generators()] == ['u']

    def test_poset_relation(self):
        cat = parse_poset("objects: x y z\nx <= y\ny <= z\narrow h: x -> z\n")

        assert cat.le('x', 'z'), "推移閉包が取られていません"
        assert cat.show(cat.parse_arrow('h')) == 'h'

    def test_unknown_line(self):
        with pytest.raises(PresentationError):
            parse_functor("source: point\ntarget: interval\nmystery\n")

    def test_functor_file(self, tmp_path):
        path = tmp_path / 'p2.functor'
        path.write_text("source: point\ntarget: interval\nobject * -> 0\n", encoding='utf-8')

        functor = load_functor(str(path))

        assert functor.on_object('*') == 0, f"対象の像が期待値と異なります。実際値: {functor.on_object('*')}"
        assert functor.check()

        base = functor.target
        assert functor.axioms('*', '*', base.identity(0)) == [functor.source.identity('*')]
        assert functor.axioms('*', '*', base.parse_arrow('f')) == [], "f の上に初期公理はないはずです"

    def test_identity_functor(self):
        cat = DiscreteNat(3)
        functor = identity_functor(cat)

        assert functor.on_object(2) == 2
        assert isinstance(functor, FunctorDef)
        assert point().objects() == ['*']
