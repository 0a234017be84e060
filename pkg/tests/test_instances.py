"""
具体例（シード・木・森・非交差分割・オラクル・解釈先）のテスト
"""

import math
import os
import sys

import pytest

# 相対インポートパスの設定
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from base.errors import IllFormed, NotAWalk, PresentationError
from core.derivation import identity, unit
from enumeration.homset import homset
from focusing.strengthen import to_derivation
from instances.forests import (
    NoncrossingPartition, closed_formulas, double_factorial, forest_of_formula, formula_of_forest,
    kreweras_interval_count, noncrossing_of, noncrossing_partitions,
)
from instances.oracles import MonotoneMap, monotone_oracle, simplex_image, tree_morphism_oracle
from instances.seeds import (
    MICRO_SEEDS, SEED_NAMES, ambisimplex, bnat, free_pair, ord_formula, ord_formula_prime, p2, pomega, seed,
)
from instances.targets import DisplacementTarget, interpret, interpret_formula
from instances.trees import (
    MarkedTree, PlaneTree, example_tree_pair, formula_of_tree, is_natural, natural_transformations,
    tree_of_formula, tree_of_walk, walk_displacement, walk_of_tree,
)


class TestSeeds:
    """名前付きシード"""

    def test_all_names_resolve(self):
        for name in SEED_NAMES:
            fib = seed(name, 3)
            assert fib.name.startswith(name), f"シード名が期待値と異なります。期待値: {name}..., 実際値: {fib.name}"

    def test_level_in_name(self):
        fib = seed('pomega(5)')

        assert fib.base.has_object(5) and not fib.base.has_object(6)

    def test_unknown_seed(self):
        with pytest.raises(PresentationError):
            seed('nosuchseed')

    def test_fp_flags(self):
        assert p2().is_fp() and all(make().is_fp() for make in MICRO_SEEDS)
        assert ambisimplex(3).is_fp(), "(epi, mono) は FP のはずです"

    def test_free_pair_is_not_posetal(self):
        base = free_pair().base
        hom = [base.show(h) for h in base.hom('a', 'c')]

        assert hom == ['p.r', 'q.r'], f"hom(a, c) が期待値と異なります。期待値: ['p.r', 'q.r'], 実際値: {hom}"
        assert len(base.hom('a', 'b')) == 2, "平行な生成子が同一視されています"
        assert free_pair in MICRO_SEEDS and 'freepair' in SEED_NAMES

    def test_ord_formulas(self):
        fib = p2()

        assert ord_formula(fib, 2).ref == 0
        assert ord_formula_prime(fib, 2).ref == 1


class TestPlaneTrees:
    """平面木と歩道"""

    def test_example_pair_counts(self):
        source, target = example_tree_pair()

        assert source.counts() == (1, 3, 3), f"源の木の層の大きさが期待値と異なります。実際値: {source.counts()}"
        assert target.counts() == (1, 3, 3, 1), f"的の木の層の大きさが期待値と異なります。実際値: {target.counts()}"

    def test_parents_round_trip(self):
        tree = PlaneTree.from_parents([(0, 0, 0), (0, 0, 2), (0,)])

        assert tree.parents() == ((0, 0, 0), (0, 0, 2), (0,))
        assert PlaneTree.from_list(tree.to_list()) == tree

    def test_non_monotone_parents(self):
        with pytest.raises(IllFormed):
            PlaneTree.from_parents([(0, 0), (1, 0)])

    def test_mark_must_reach(self):
        with pytest.raises(IllFormed):
            MarkedTree(PlaneTree(), 1)

    def test_walk_round_trip(self):
        for mt in example_tree_pair():
            assert tree_of_walk(walk_of_tree(mt)) == mt

    def test_formula_round_trip(self):
        fib = pomega(4)
        for mt in example_tree_pair():
            S = formula_of_tree(fib, mt)
            assert tree_of_formula(S) == mt, "Dyck 符号化が木に戻りません"
            assert walk_displacement(S) == mt.mark

    def test_level_too_small(self):
        _, target = example_tree_pair()

        with pytest.raises(PresentationError):
            formula_of_tree(pomega(2), target)

    def test_negative_walk(self):
        fib = bnat()
        one = fib.base.arrow(1)
        S = fib.pull(one, fib.atom('*'))

        assert walk_displacement(S) == -1
        with pytest.raises(NotAWalk):
            tree_of_formula(S)

    def test_displacement(self):
        fib = bnat()
        S = fib.push(fib.base.arrow(1), fib.atom('*'))

        assert walk_displacement(S) == 1, f"変位が期待値と異なります。期待値: 1, 実際値: {walk_displacement(S)}"
        assert tree_of_formula(S).mark == 1


class TestTreeMorphisms:
    """木の射"""

    def test_brute_force_count(self):
        source, target = example_tree_pair()
        found = natural_transformations(source, target)

        assert len(found) == 11, f"自然変換の数が期待値と異なります。期待値: 11, 実際値: {len(found)}"
        assert all(is_natural(source, target, maps) for maps in found)

    def test_oracle_matches_brute_force(self):
        fib = pomega(4)
        source, target = example_tree_pair()
        proofs = homset(fib, formula_of_tree(fib, source), fib.base.identity(0), formula_of_tree(fib, target))
        images = [tree_morphism_oracle(fib, to_derivation(fib, p)) for p in proofs]

        assert proofs.count == 11, f"射の数が期待値と異なります。期待値: 11, 実際値: {proofs.count}"
        assert len(set(images)) == 11, "オラクルの像に重複があります"
        assert set(images) == set(natural_transformations(source, target))

    def test_mark_mismatch(self):
        source, _ = example_tree_pair()
        marked = MarkedTree(source.tree, 1)

        assert natural_transformations(source, marked) == []


class TestMonotoneOracle:
    """単調写像のオラクル"""

    def test_counts(self):
        for (m, n), expected in {(2, 2): 3, (0, 1): 1, (3, 2): 4, (1, 0): 0}.items():
            actual = len(monotone_oracle(m, n))
            assert actual == expected, f"⟨{m}⟩ -> ⟨{n}⟩ の数が期待値と異なります。期待値: {expected}, 実際値: {actual}"

    def test_binomial(self):
        for m in range(5):
            for n in range(1, 5):
                assert len(monotone_oracle(m, n)) == math.comb(m + n - 1, m)

    def test_out_of_range(self):
        with pytest.raises(IllFormed):
            monotone_oracle(9, 1)

    def test_non_monotone(self):
        with pytest.raises(IllFormed):
            MonotoneMap(2, 2, (1, 0))

    def test_simplex_image_is_bijection(self):
        fib = p2()
        proofs = homset(fib, ord_formula(fib, 2), fib.base.identity(0), ord_formula(fib, 3))
        images = [simplex_image(fib, to_derivation(fib, p)).images for p in proofs]

        assert len(set(images)) == len(images) == 6
        assert set(images) == {f.images for f in monotone_oracle(2, 3)}

    def test_identity_interprets_as_identity(self):
        fib = p2()
        image = simplex_image(fib, identity(fib, ord_formula(fib, 3)))

        assert image.source == image.target == 3


class TestDisplacementTarget:
    """B(ℕ) 上の (ℤ, ≤) への解釈"""

    def test_unit(self):
        fib = bnat()
        target = DisplacementTarget(fib.base)
        one = fib.base.arrow(1)
        arrow = interpret(fib, unit(fib, one, fib.atom('*')), target)

        assert (arrow.src, arrow.tgt) == (0, 0), f"η の解釈が期待値と異なります。実際値: {(arrow.src, arrow.tgt)}"
        assert interpret_formula(target, fib.pull(one, fib.atom('*'))) == -1


class TestForests:
    """両単体的論理式・増加二分森・非交差分割"""

    def setup_method(self):
        self.fib = ambisimplex(5)

    def test_double_factorial_counts(self):
        for n in range(5):
            count = sum(1 for _ in closed_formulas(self.fib, n))
            assert count == double_factorial(n), f"χ = {n} の論理式の数が期待値と異なります。期待値: {double_factorial(n)}, 実際値: {count}"
        assert double_factorial(3) == 15 and double_factorial(5) == 945

    def test_forest_round_trip(self):
        for S in closed_formulas(self.fib, 3):
            forest = forest_of_formula(S)
            assert formula_of_forest(self.fib, forest) == S
            assert type(forest).from_dict(forest.to_dict()) == forest
            assert forest.open_edges == 0, "閉じた論理式の森に開いた辺が残っています"

    def test_partitions_are_noncrossing(self):
        expected = {str(p) for p in noncrossing_partitions(4)}
        found = {str(noncrossing_of(forest_of_formula(S))) for S in closed_formulas(self.fib, 4)}

        assert found == expected, f"非交差分割の像が期待値と異なります。実際値: {sorted(found)}"

    def test_catalan_counts(self):
        for n in range(6):
            expected = math.comb(2 * n, n) // (n + 1)
            assert len(noncrossing_partitions(n)) == expected, f"|NC({n})| が Catalan 数と異なります"

    def test_kreweras_intervals(self):
        assert kreweras_interval_count(3) == 12
        assert kreweras_interval_count(4) == 55

    def test_refinement(self):
        fine = NoncrossingPartition(((0,), (1,), (2,)))
        coarse = NoncrossingPartition(((0, 1, 2),))

        assert fine.refines(coarse) and not coarse.refines(fine)
        assert str(fine) == '0|1|2' and str(coarse) == '012'
        assert coarse.to_list() == [[0, 1, 2]]
