# 集中：弱集中・強多重集中・正規化・極大探索
from .alternating import AltAtom, AltPull, AltPush, alternate, ceil_formula, floor_formula
from .weak import (
    WAtom, WLDiv, WLMult, WRDiv, WRMult, ceil, floor, infer_weak, weak_preimage, weak_views,
)
from .multi import (
    MAtom, MBiDiv, MBiMult, MLDiv, MLMult, MRDiv, MRMult,
    infer_multi, parse_multi, project, show_multi,
)
from .rewrite import (
    BipoleView, LBipole, LRBipole, RBipole,
    from_bipoles, is_maximal, normalize, rewrite_step, to_bipoles, unique_filler, weight,
)
from .strengthen import inv_seq, sequentialize, strengthen, to_derivation, to_multi
from .maxsearch import LockState, MaxSearch, UNLOCKED, count_max, max_search
from .mfcut import cartcomp, mf_cut, opcartcomp

__all__ = [
    'AltAtom', 'AltPull', 'AltPush', 'alternate', 'ceil_formula', 'floor_formula',
    'WAtom', 'WLDiv', 'WLMult', 'WRDiv', 'WRMult', 'ceil', 'floor', 'infer_weak',
    'weak_preimage', 'weak_views',
    'MAtom', 'MBiDiv', 'MBiMult', 'MLDiv', 'MLMult', 'MRDiv', 'MRMult',
    'infer_multi', 'parse_multi', 'project', 'show_multi',
    'BipoleView', 'LBipole', 'LRBipole', 'RBipole',
    'from_bipoles', 'is_maximal', 'normalize', 'rewrite_step', 'to_bipoles', 'unique_filler', 'weight',
    'inv_seq', 'sequentialize', 'strengthen', 'to_derivation', 'to_multi',
    'LockState', 'MaxSearch', 'UNLOCKED', 'count_max', 'max_search',
    'cartcomp', 'mf_cut', 'opcartcomp',
]
