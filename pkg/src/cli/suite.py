"""
受け入れ基準スイート

各基準は CriterionResult を返す。失敗は例外ではなく結果として集め、
最後に表にまとめる。時間は標準出力に出さずログにだけ残す。
"""

import logging
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from base.errors import BifibError

from config.environment import get_search_config
from core.cut import cut
from core.derivation import identity
from core.fibration import FreeBifibration
from core.formula import Formula, connectives
from core.permeq import permeq_decide_bfs, permeq_neighbors
from core.sampling import random_derivation, random_extension
from core.search import count_permeq_classes
from enumeration.homset import decide_equal, homset
from enumeration.poset import bc_quotient, fiber_poset, poset_analyze
from focusing.maxsearch import count_max
from focusing.mfcut import mf_cut
from focusing.rewrite import normalize, redexes, rewrite_step, weight
from focusing.strengthen import inv_seq, sequentialize, strengthen, to_derivation, to_multi
from instances.forests import (
    F03_COVERS, closed_formulas, double_factorial, kreweras_interval_count, noncrossing_partitions,
)
from instances.oracles import monotone_oracle, simplex_image, tree_morphism_oracle
from instances.seeds import MICRO_SEEDS, ambisimplex, ord_formula, p2, pomega
from instances.trees import example_tree_pair, formula_of_tree, is_natural, natural_transformations
from zigzag.cells import dagger, decompose, recompose

logger = logging.getLogger(__name__)

CLASS_COUNTS = (1, 1, 2, 7, 35, 226)
TREE_MORPHISMS = 11


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ''
    seconds: float = 0.0
    failures: List[str] = field(default_factory=list)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def kreweras_intervals(n: int) -> int:
    """C(3n, n) / (2n + 1)"""
    return math.comb(3 * n, n) // (2 * n + 1)


class AcceptanceSuite:
    """
    受け入れ基準 1-8 を順に実行する

    Args:
        max_n: int - 両単体的な基準で調べる χ の上限（5 は時間がかかる）
        samples: int - 書き換え性質で生成するランダム導出の数
        seed: int - 乱数シード
    """

    def __init__(self, max_n: int = 4, samples: int = 500, seed: Optional[int] = None,
                 budget: Optional[int] = None):
        search = get_search_config()
        self.max_n = max_n
        self.samples = samples
        self.seed = seed if seed is not None else search['seed']
        self.budget = budget if budget is not None else search['budget']

    def criteria(self) -> List[Callable[[], CriterionResult]]:
        return [
            self.simplex_counts,
            self.monotone_bijection,
            self.tree_morphisms,
            self.ambisimplicial_counts,
            self.fiber_structure,
            self.kreweras_quotient,
            self.rewriting_soundness,
            self.maximality_correspondence,
        ]

    def run(self) -> List[CriterionResult]:
        results = []
        for criterion in self.criteria():
            started = time.perf_counter()
            try:
                result = criterion()
            except BifibError as e:
                number = self.criteria().index(criterion) + 1
                result = CriterionResult(number, criterion.__name__, False, e.code, failures=[str(e)])
            result.seconds = time.perf_counter() - started
            logger.info("criterion %d %s: %s (%.2fs)", result.number, result.title,
                        'PASS' if result.passed else 'FAIL', result.seconds)
            for failure in result.failures[:5]:
                logger.info("  %s", failure)
            results.append(result)
        return results

    # --- 1, 2 ---

    def simplex_counts(self) -> CriterionResult:
        fib = p2()
        ident = fib.base.identity(0)
        failures = []
        for m in range(6):
            for n in range(1, 6):
                count = homset(fib, ord_formula(fib, m), ident, ord_formula(fib, n)).count
                expected = math.comb(m + n - 1, m)
                if count != expected:
                    failures.append(f"⟨{m}⟩ -> ⟨{n}⟩: 期待値 {expected}, 実際値 {count}")
        return CriterionResult(1, 'simplex counts', not failures, '30 judgments', failures=failures)

    def monotone_bijection(self) -> CriterionResult:
        fib = p2()
        ident = fib.base.identity(0)
        failures = []
        for m in range(5):
            for n in range(1, 5):
                proofs = homset(fib, ord_formula(fib, m), ident, ord_formula(fib, n))
                images = [simplex_image(fib, to_derivation(fib, p)).images for p in proofs]
                oracle = {f.images for f in monotone_oracle(m, n)}
                if len(set(images)) != len(images) or set(images) != oracle:
                    failures.append(f"⟨{m}⟩ -> ⟨{n}⟩: 像 {sorted(images)} / オラクル {sorted(oracle)}")
        return CriterionResult(2, 'monotone bijection', not failures, 'm, n ≤ 4', failures=failures)

    # --- 3 ---

    def tree_morphisms(self) -> CriterionResult:
        fib = pomega(4)
        source, target = example_tree_pair()
        proofs = homset(fib, formula_of_tree(fib, source), fib.base.identity(0), formula_of_tree(fib, target))
        images = [tree_morphism_oracle(fib, to_derivation(fib, p)) for p in proofs]
        brute = natural_transformations(source, target)
        failures = []
        if proofs.count != TREE_MORPHISMS:
            failures.append(f"射の数: 期待値 {TREE_MORPHISMS}, 実際値 {proofs.count}")
        if len(set(images)) != len(images):
            failures.append("オラクルの像に重複があります")
        failures += [f"自然でない像 {maps}" for maps in images if not is_natural(source, target, maps)]
        if set(images) != set(brute):
            failures.append(f"総当たり {len(brute)} 個と一致しません")
        return CriterionResult(3, 'tree morphisms', not failures, f"{proofs.count} morphisms", failures=failures)

    # --- 4, 5, 6 ---

    def ambisimplicial_counts(self) -> CriterionResult:
        fib = ambisimplex(self.max_n)
        failures = []
        for n in range(self.max_n + 1):
            formulas = sum(1 for _ in closed_formulas(fib, n))
            if formulas != double_factorial(n):
                failures.append(f"χ = {n} の論理式: 期待値 {double_factorial(n)}, 実際値 {formulas}")
            classes = len(fiber_poset(k=0, n=n, fib=fib))
            if classes != CLASS_COUNTS[n]:
                failures.append(f"F_{{0,{n}}} の元: 期待値 {CLASS_COUNTS[n]}, 実際値 {classes}")
        return CriterionResult(4, 'ambisimplicial counts', not failures, f"n ≤ {self.max_n}", failures=failures)

    def fiber_structure(self) -> CriterionResult:
        failures = []
        f03 = fiber_poset(k=0, n=3)
        if len(f03) != 7:
            failures.append(f"F_{{0,3}} の元: 期待値 7, 実際値 {len(f03)}")
        if set(f03.labelled_covers()) != set(F03_COVERS):
            failures.append(f"F_{{0,3}} の被覆: {sorted(f03.labelled_covers())}")
        detail = 'F_{0,3}'
        if self.max_n >= 4:
            f04 = fiber_poset(k=0, n=4)
            report = poset_analyze(f04)
            if len(f04) != 35:
                failures.append(f"F_{{0,4}} の元: 期待値 35, 実際値 {len(f04)}")
            if report.is_lattice or report.failing_pair is None:
                failures.append("F_{0,4} が束と判定されました")
            else:
                detail += f", F_{{0,4}} not a lattice at {report.failing_pair}"
        return CriterionResult(5, 'fiber structure', not failures, detail, failures=failures)

    def kreweras_quotient(self) -> CriterionResult:
        failures = []
        for n in range(1, self.max_n + 1):
            quotient = bc_quotient(fiber_poset(k=0, n=n))
            if len(quotient) != catalan(n):
                failures.append(f"K_{n} の元: 期待値 {catalan(n)}, 実際値 {len(quotient)}")
            expected_labels = {str(p) for p in noncrossing_partitions(n)}
            if set(quotient.labels) != expected_labels:
                failures.append(f"K_{n} のラベル {sorted(quotient.labels)}")
            if n <= 4:
                intervals = poset_analyze(quotient).interval_count
                if intervals != kreweras_intervals(n) or intervals != kreweras_interval_count(n):
                    failures.append(f"K_{n} の区間: 期待値 {kreweras_intervals(n)}, 実際値 {intervals}")
        return CriterionResult(6, 'kreweras quotient', not failures, f"n ≤ {self.max_n}", failures=failures)

    # --- 7 ---

    def _check_sample(self, fib: FreeBifibration, rng: random.Random) -> List[str]:
        failures = []
        d = random_derivation(fib, rng, depth=6)
        judgment = fib.judgment(d)
        m = to_multi(fib, d)

        # 重みの減少
        current = m
        while True:
            found = redexes(fib, current)
            if not found:
                break
            rule, pos = found[0]
            nxt = rewrite_step(fib, current, rule, pos)
            if weight(fib, nxt) >= weight(fib, current):
                failures.append(f"{rule}@{pos} で重みが減りません")
                break
            current = nxt

        # 戦略によらない正規形
        normal, _ = normalize(fib, m, 'bottom_up')
        if normalize(fib, m, 'top_down')[0] != normal:
            failures.append("bottom_up と top_down の正規形が異なります")

        # 正規形判定と BFS の一致
        for p in homset(fib, judgment.lhs, judgment.base, judgment.rhs):
            e = to_derivation(fib, p)
            if decide_equal(fib, d, e, self.budget) != permeq_decide_bfs(fib, d, e, self.budget):
                failures.append("decide_equal と BFS の判定が食い違います")

        # カットの単位律と結合律
        left, right = identity(fib, judgment.lhs), identity(fib, judgment.rhs)
        if not decide_equal(fib, cut(fib, left, d), d) or not decide_equal(fib, cut(fib, d, right), d):
            failures.append("恒等導出とのカットが元に戻りません")
        b = random_extension(fib, rng, judgment.rhs)
        c = random_extension(fib, rng, fib.judgment(b).rhs)
        if not decide_equal(fib, cut(fib, cut(fib, d, b), c), cut(fib, d, cut(fib, b, c))):
            failures.append("カットが結合的ではありません")

        # セル分解
        delta, stack = decompose(fib, d)
        if recompose(delta, stack) != d:
            failures.append("decompose / recompose が往復しません")
        if dagger(dagger(stack)) != stack:
            failures.append("dagger が対合ではありません")

        # 生成セルの交換は置換同値
        if not all(decide_equal(fib, d, n) for n in permeq_neighbors(fib, d)):
            failures.append("隣接する置換が同値と判定されません")

        # 強化と逐次化の往復
        if normalize(fib, strengthen(fib, inv_seq(fib, m)))[0] != normal:
            failures.append("strengthen ∘ inv_seq が正規形を変えます")
        if any(normalize(fib, s)[0] != normal for s in sequentialize(fib, normal, 'foc')):
            failures.append("逐次化が正規形を変えます")

        # 多重集中カット
        if mf_cut(fib, m, to_multi(fib, b)) != normalize(fib, to_multi(fib, cut(fib, d, b)))[0]:
            failures.append("mf_cut が外延的な合成と一致しません")
        return failures

    def rewriting_soundness(self) -> CriterionResult:
        rng = random.Random(self.seed)
        failures = []
        for i in range(self.samples):
            fib = MICRO_SEEDS[i % len(MICRO_SEEDS)]()
            failures += [f"sample {i}: {f}" for f in self._check_sample(fib, rng)]
        return CriterionResult(7, 'rewriting soundness', not failures, f"{self.samples} samples", failures=failures)

    # --- 8 ---

    def maximality_correspondence(self, depth: int = 3) -> CriterionResult:
        failures = []
        checked = 0
        for make in MICRO_SEEDS:
            fib = make()
            formulas = small_formulas(fib, depth)
            for S in formulas:
                for T in formulas:
                    if len(connectives(S)) + len(connectives(T)) > depth:
                        continue
                    for f in fib.base.hom(S.ref, T.ref):
                        maximal = count_max(fib, S, f, T)
                        classes = count_permeq_classes(fib, S, f, T, self.budget)
                        checked += 1
                        if maximal != classes:
                            failures.append(f"{fib.name} {S} ⊢ {T}: 極大証明 {maximal}, 類 {classes}")
        return CriterionResult(8, 'maximality correspondence', not failures, f"{checked} judgments",
                               failures=failures)


def small_formulas(fib: FreeBifibration, depth: int) -> List[Formula]:
    """生成子に沿った結合子を depth 個まで重ねた論理式"""
    layer: List[Formula] = [fib.atom(x) for x in fib.domain.objects()]
    found = list(layer)
    for _ in range(depth):
        nxt = []
        for S in layer:
            for g in fib.base.generators():
                if g.dom == S.ref:
                    nxt.append(fib.push(g, S))
                if g.cod == S.ref:
                    nxt.append(fib.pull(g, S))
        found += nxt
        layer = nxt
    return found


def format_table(results: List[CriterionResult]) -> str:
    lines = [f"{'#':>2}  {'criterion':<28}{'result':<8}detail"]
    for r in results:
        lines.append(f"{r.number:>2}  {r.title:<28}{'PASS' if r.passed else 'FAIL':<8}{r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} passed")
    return '\n'.join(lines)
