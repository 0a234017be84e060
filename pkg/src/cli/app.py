"""
コマンドライン・フロントエンド

    count   S ⊢_f T の射の数
    enum    S ⊢_f T の極大証明を一行ずつ
    eq      二つの導出の置換同値
    nf      正規形と書き換え回数
    render  導出のセル分解図（テキスト / SVG）
    poset   ファイバー半順序 F_{k,n}（Hasse 図・束判定・商）
    suite   受け入れ基準の表

ドメイン例外は標準エラーへ JSON で出し、終了コード 2 を返す。
スイートの失敗は終了コード 1。
"""

import argparse
import json
import logging
import re
import sys
from typing import List, Optional

from base.errors import BifibError
from base.presentation import load_functor

from config.environment import get_config, get_search_config
from core.derivation import Derivation
from core.fibration import FreeBifibration, bifibration
from core.formula import Formula
from core.sexpr import parse_derivation, parse_formula
from enumeration.homset import decide, homset
from enumeration.poset import EXPORTERS, KIND_AMBISIMPLICIAL, bc_quotient, fiber_poset, poset_analyze
from focusing.multi import MultiDerivation, parse_multi, show_multi
from focusing.rewrite import STRATEGIES, normalize
from focusing.strengthen import to_multi
from instances.seeds import SEED_NAMES, ord_formula, ord_formula_prime, seed, zigzag_example
from zigzag.cells import decompose
from zigzag.render import render

from .suite import AcceptanceSuite, format_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SUITE_FAILED = 1
EXIT_DOMAIN_ERROR = 2

_ORD = re.compile(r"^ord(')?\s+(\d+)$")


def _setup_logging():
    level = getattr(logging, str(get_config().get('logging_level', 'INFO')).upper(), logging.INFO)
    logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr)


def _fibration(args) -> FreeBifibration:
    if args.functor:
        return bifibration(load_functor(args.functor), name=args.functor)
    return seed(args.seed, args.level)


def _formula(fib: FreeBifibration, text: str) -> Formula:
    """S 式か 'ord 2' / "ord' 2" の略記"""
    match = _ORD.match(text.strip())
    if match:
        n = int(match.group(2))
        return ord_formula_prime(fib, n) if match.group(1) else ord_formula(fib, n)
    return parse_formula(fib, text)


def _judgment(fib: FreeBifibration, args):
    S = _formula(fib, args.source)
    T = S if args.target == 'same' else _formula(fib, args.target)
    f = fib.base.parse_arrow(args.arrow) if args.arrow else fib.base.identity(S.ref)
    return S, f, T


def _derivation(fib: FreeBifibration, text: str) -> Derivation:
    return parse_derivation(fib, text)


def _multi(fib: FreeBifibration, text: str) -> MultiDerivation:
    if text.lstrip().startswith('(m-'):
        return parse_multi(fib, text)
    return to_multi(fib, parse_derivation(fib, text))


def _emit(args, text: str):
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as handle:
            handle.write(text if text.endswith('\n') else text + '\n')
    else:
        print(text)


# --- サブコマンド ---

def cmd_count(args) -> int:
    fib = _fibration(args)
    S, f, T = _judgment(fib, args)
    result = homset(fib, S, f, T, args.budget)
    if args.format == 'json':
        _emit(args, json.dumps({'count': result.count, 'mode': result.stats.get('mode')}))
    else:
        _emit(args, str(result.count))
    return EXIT_OK


def cmd_enum(args) -> int:
    fib = _fibration(args)
    S, f, T = _judgment(fib, args)
    result = homset(fib, S, f, T, args.budget)
    terms = [show_multi(fib, m) for m in result]
    if args.format == 'json':
        _emit(args, json.dumps({'count': result.count, 'proofs': terms}, ensure_ascii=False, indent=2))
    else:
        _emit(args, '\n'.join(terms) if terms else '(none)')
    return EXIT_OK


def cmd_eq(args) -> int:
    fib = _fibration(args)
    equal, mode = decide(fib, _derivation(fib, args.left), _derivation(fib, args.right), args.budget)
    verdict = 'EQUAL' if equal else 'DISTINCT'
    if args.format == 'json':
        _emit(args, json.dumps({'equal': equal, 'mode': mode}))
    else:
        _emit(args, f"{verdict} ({mode})")
    return EXIT_OK


def cmd_nf(args) -> int:
    fib = _fibration(args)
    normal, steps = normalize(fib, _multi(fib, args.term), args.strategy, args.seed_rng)
    if args.format == 'json':
        _emit(args, json.dumps({'normal_form': show_multi(fib, normal), 'steps': steps}, ensure_ascii=False))
    else:
        _emit(args, f"{show_multi(fib, normal)}\nsteps: {steps}")
    return EXIT_OK


def cmd_render(args) -> int:
    if args.term is None:
        fib, d = zigzag_example()
    else:
        fib = _fibration(args)
        d = _derivation(fib, args.term)
    _, stack = decompose(fib, d)
    if args.svg:
        with open(args.svg, 'w', encoding='utf-8') as handle:
            handle.write(render(fib.base, stack, 'svg'))
        _emit(args, f"wrote {args.svg}")
    else:
        _emit(args, render(fib.base, stack, 'text'))
    return EXIT_OK


def cmd_poset(args) -> int:
    poset = fiber_poset(args.kind, args.k, args.n, args.level)
    if args.quotient:
        poset = bc_quotient(poset)
    if args.lattice:
        report = poset_analyze(poset)
        if args.format == 'json':
            _emit(args, json.dumps(report.to_dict(), ensure_ascii=False))
        elif report.is_lattice:
            _emit(args, f"LATTICE ({report.size} elements, {report.interval_count} intervals)")
        else:
            a, b = report.failing_pair or ('-', '-')
            _emit(args, f"NOT A LATTICE: {a} {b} have no {report.missing}")
        return EXIT_OK
    fmt = args.format if args.format in EXPORTERS else 'dot'
    text = EXPORTERS[fmt](poset)
    if fmt == 'dot':
        text = f"{len(poset)} elements\n{text}"
    _emit(args, text.rstrip('\n'))
    return EXIT_OK


def cmd_suite(args) -> int:
    suite = AcceptanceSuite(max_n=args.max_n, samples=args.samples, seed=args.seed_rng, budget=args.budget)
    results = suite.run()
    _emit(args, format_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_SUITE_FAILED


# --- 引数 ---

def build_parser() -> argparse.ArgumentParser:
    search = get_search_config()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', default='p2', help=f"シード名（{', '.join(SEED_NAMES)}、pomega(3) など）")
    common.add_argument('--level', type=int, default=None, help='無限基底の打ち切りレベル')
    common.add_argument('--functor', default=None, help='関手ファイル（--seed より優先）')
    common.add_argument('--budget', type=int, default=search['budget'], help='BFS の探索ノード予算')
    common.add_argument('--seed-rng', type=int, default=search['seed'], help='乱数シード')
    common.add_argument('--format', choices=('text', 'json', 'dot', 'csv'), default='text', help='出力形式')
    common.add_argument('--out', default=None, help='出力ファイル（省略時は標準出力）')

    parser = argparse.ArgumentParser(prog='bifib', description='自由双ファイブレーションの証明探索・列挙エンジン')
    sub = parser.add_subparsers(dest='command', required=True)

    for name, handler, text in (('count', cmd_count, '射の数'), ('enum', cmd_enum, '極大証明の列挙')):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('--from', dest='source', required=True, help="左辺の論理式（S 式または 'ord n'）")
        p.add_argument('--to', dest='target', required=True, help="右辺の論理式（'same' で左辺と同じ）")
        p.add_argument('--base', '--arrow', dest='arrow', default=None, help='基底の射（省略時は恒等射）')
        p.set_defaults(handler=handler)

    p = sub.add_parser('eq', parents=[common], help='置換同値の判定')
    p.add_argument('left', help='導出の S 式')
    p.add_argument('right', help='導出の S 式')
    p.set_defaults(handler=cmd_eq)

    p = sub.add_parser('nf', parents=[common], help='正規形')
    p.add_argument('term', help='導出または多重集中導出の S 式')
    p.add_argument('--strategy', choices=STRATEGIES, default='bottom_up', help='書き換え戦略')
    p.set_defaults(handler=cmd_nf)

    p = sub.add_parser('render', parents=[common], help='セル分解図')
    p.add_argument('term', nargs='?', default=None, help='導出の S 式（省略時はジグザグの例）')
    p.add_argument('--svg', default=None, help='SVG の出力先')
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser('poset', parents=[common], help='ファイバー半順序')
    p.add_argument('--kind', default=KIND_AMBISIMPLICIAL, help='ファイバーの種類')
    p.add_argument('--k', type=int, default=0, help='底の対象 ⟨k⟩')
    p.add_argument('--n', type=int, default=3, help='葉の数 χ')
    p.add_argument('--lattice', action='store_true', help='束かどうかを調べる')
    p.add_argument('--quotient', action='store_true', help='非交差分割による商を取る')
    p.set_defaults(handler=cmd_poset)

    p = sub.add_parser('suite', parents=[common], help='受け入れ基準')
    p.add_argument('name', choices=('acceptance',), help='スイート名')
    p.add_argument('--max-n', type=int, default=4, help='両単体的な基準の χ の上限')
    p.add_argument('--samples', type=int, default=500, help='ランダム導出の数')
    p.set_defaults(handler=cmd_suite)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BifibError as e:
        logger.debug("domain error: %s", e.code)
        print(json.dumps(e.to_dict(), ensure_ascii=False), file=sys.stderr)
        return EXIT_DOMAIN_ERROR
