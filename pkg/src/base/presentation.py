"""
圏の提示ファイルと関手ファイルの読み込み

提示ファイル（行指向）:
    objects: a b c
    arrow f: a -> b
または組み込み指定 1 行:
    simplex 5 / omega 6 / interval / monoid-nat / discrete-nat 5 / point
    free <graphfile> / poset <relfile>

poset の関係ファイル:
    objects: a b c
    a <= b
    arrow f: a -> b      （名前付き射、任意）

関手ファイル:
    source: <組み込み指定 | file <path>>
    target: <組み込み指定 | file <path>>
    object X -> A        （'objects identity' で恒等写像）
    arrow d -> f.g
"""

import logging
import os
import re
from typing import Any, Dict, List, Optional, Tuple

from .backends import DiscreteCat, DiscreteNat, FinPoset, FreeCat, MonoidNat, SimplexCat, interval, omega_chain, point
from .category import CategoryBackend
from .errors import PresentationError
from .functor import FunctorDef

logger = logging.getLogger(__name__)

_ARROW_LINE = re.compile(r'^arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$')
_LE_LINE = re.compile(r'^(\S+)\s*<=\s*(\S+)$')


def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _coerce(token: str) -> Any:
    return int(token) if token.isdigit() else token


def _read(path: str, base_dir: Optional[str]) -> str:
    full = path if os.path.isabs(path) or base_dir is None else os.path.join(base_dir, path)
    try:
        with open(full, encoding='utf-8') as handle:
            return handle.read()
    except OSError as e:
        raise PresentationError(
            f"提示ファイル {full} を読めません",
            str(e),
            "パスと読み取り権限を確認してください",
        )


def parse_graph(text: str) -> Tuple[List[Any], Dict[str, Tuple[Any, Any]]]:
    """objects 行と arrow 行からグラフを読む"""
    objects: List[Any] = []
    edges: Dict[str, Tuple[Any, Any]] = {}
    for line in _content_lines(text):
        if line.startswith('objects:'):
            objects.extend(_coerce(t) for t in line[len('objects:'):].split())
            continue
        match = _ARROW_LINE.match(line)
        if match:
            label, src, tgt = match.groups()
            edges[label] = (_coerce(src), _coerce(tgt))
            continue
        raise PresentationError(
            f"解釈できない行です: '{line}'",
            "objects: 行でも arrow 行でもありません",
            "'objects: a b c' か 'arrow f: a -> b' の形式で書いてください",
        )
    return objects, edges


def parse_poset(text: str) -> FinPoset:
    objects: List[Any] = []
    relation: List[Tuple[Any, Any]] = []
    names: Dict[str, Tuple[Any, Any]] = {}
    for line in _content_lines(text):
        if line.startswith('objects:'):
            objects.extend(_coerce(t) for t in line[len('objects:'):].split())
        elif _ARROW_LINE.match(line):
            label, src, tgt = _ARROW_LINE.match(line).groups()
            names[label] = (_coerce(src), _coerce(tgt))
            relation.append(names[label])
        elif _LE_LINE.match(line):
            src, tgt = _LE_LINE.match(line).groups()
            relation.append((_coerce(src), _coerce(tgt)))
        else:
            raise PresentationError(
                f"解釈できない関係行です: '{line}'",
                "objects: / 'a <= b' / arrow 行のいずれでもありません",
                "関係ファイルの書式を確認してください",
            )
    return FinPoset(objects, relation, names)


def load_backend(line: str, base_dir: Optional[str] = None) -> CategoryBackend:
    """組み込み指定 1 行からバックエンドを作る"""
    words = line.split()
    if not words:
        raise PresentationError("バックエンド指定が空です", "指定行に語がありません", "例: 'simplex 5'")
    head, args = words[0], words[1:]

    def level(default: Optional[int] = None) -> int:
        if args and args[0].isdigit():
            return int(args[0])
        if default is not None:
            return default
        raise PresentationError(
            f"'{head}' には打ち切りレベルが必要です",
            f"引数 {args} に整数がありません",
            f"例: '{head} 5'",
        )

    if head == 'simplex':
        return SimplexCat(level())
    if head == 'omega':
        return omega_chain(level())
    if head == 'interval':
        return interval()
    if head == 'monoid-nat':
        return MonoidNat(level(16))
    if head == 'discrete-nat':
        return DiscreteNat(level())
    if head == 'point':
        return point()
    if head == 'discrete':
        return DiscreteCat([_coerce(t) for t in args])
    if head in ('free', 'poset', 'file') and args:
        text = _read(args[0], base_dir)
        if head == 'poset':
            return parse_poset(text)
        return parse_presentation(text, base_dir)
    raise PresentationError(
        f"未知のバックエンド指定 '{line}' です",
        "組み込み名に一致しません",
        "simplex/omega/interval/free/poset/monoid-nat/discrete-nat/point のいずれかを使ってください",
    )


def parse_presentation(text: str, base_dir: Optional[str] = None) -> CategoryBackend:
    """提示ファイル本文を解釈する。1 行だけの組み込み指定も受け付ける"""
    lines = _content_lines(text)
    if len(lines) == 1 and not lines[0].startswith('objects:') and not lines[0].startswith('arrow '):
        return load_backend(lines[0], base_dir)
    objects, edges = parse_graph(text)
    logger.debug("free category with %d objects and %d edges", len(objects), len(edges))
    return FreeCat(objects, edges)


def load_presentation(path: str) -> CategoryBackend:
    return parse_presentation(_read(path, None), os.path.dirname(os.path.abspath(path)))


def parse_functor(text: str, base_dir: Optional[str] = None) -> FunctorDef:
    source: Optional[CategoryBackend] = None
    target: Optional[CategoryBackend] = None
    object_lines: List[Tuple[str, str]] = []
    arrow_lines: List[Tuple[str, str]] = []
    identity_objects = False
    for line in _content_lines(text):
        if line.startswith('source:'):
            source = load_backend(line[len('source:'):].strip(), base_dir)
        elif line.startswith('target:'):
            target = load_backend(line[len('target:'):].strip(), base_dir)
        elif line == 'objects identity':
            identity_objects = True
        elif line.startswith('object ') and '->' in line:
            left, right = line[len('object '):].split('->', 1)
            object_lines.append((left.strip(), right.strip()))
        elif line.startswith('arrow ') and '->' in line:
            left, right = line[len('arrow '):].split('->', 1)
            arrow_lines.append((left.strip(), right.strip()))
        else:
            raise PresentationError(
                f"解釈できない関手行です: '{line}'",
                "source:/target:/object/arrow のいずれでもありません",
                "関手ファイルの書式を確認してください",
            )
    if source is None or target is None:
        raise PresentationError(
            "関手ファイルに source: と target: が必要です",
            "どちらかの行が欠けています",
            "'source: point' のように両方を指定してください",
        )
    if identity_objects:
        object_map: Any = lambda x: x
    else:
        object_map = {source.parse_object(a): target.parse_object(b) for a, b in object_lines}
    arrow_map = {label: target.parse_arrow(image) for label, image in arrow_lines}
    functor = FunctorDef(source, target, object_map, arrow_map)
    functor.check()
    return functor


def load_functor(path: str) -> FunctorDef:
    return parse_functor(_read(path, None), os.path.dirname(os.path.abspath(path)))
