# ホムセット列挙・等価判定・ファイバー半順序
from .homset import (
    EquivClassToken, HomsetResult, MODE_BFS, MODE_NORMAL_FORM, class_token, decide, decide_equal, homset,
    logical_equiv,
)
from .poset import (
    EXPORTERS, FiberPoset, PosetReport, bc_quotient, fiber_poset, poset_analyze, to_csv, to_dot, to_json,
)

__all__ = [
    'EquivClassToken', 'HomsetResult', 'MODE_BFS', 'MODE_NORMAL_FORM', 'class_token', 'decide', 'decide_equal',
    'homset', 'logical_equiv',
    'EXPORTERS', 'FiberPoset', 'PosetReport', 'bc_quotient', 'fiber_poset', 'poset_analyze', 'to_csv', 'to_dot',
    'to_json',
]
