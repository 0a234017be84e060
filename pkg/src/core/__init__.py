# 論理式・導出・カット・置換同値・厳密化
from .formula import Atom, Formula, Judgment, Pull, Push, is_strictly_alternating
from .derivation import (
    AtomAx, Derivation, LDiv, LMult, RDiv, RMult,
    cart, cartesian_lift, counit, identity, opcart, pseudofunctor_witnesses, unit,
)
from .fibration import FreeBifibration, bifibration
from .cut import cut
from .permeq import permeq_class, permeq_decide_bfs, permeq_neighbors
from .strictify import strictify, strictify_derivation, strictify_formula
from .search import count_permeq_classes, derivations, permeq_classes
from .sampling import random_composable_pair, random_derivation, random_extension
from .transport import transport_derivation, transport_fibration, transport_formula

__all__ = [
    'Atom', 'Formula', 'Judgment', 'Pull', 'Push', 'is_strictly_alternating',
    'AtomAx', 'Derivation', 'LDiv', 'LMult', 'RDiv', 'RMult',
    'cart', 'cartesian_lift', 'counit', 'identity', 'opcart', 'pseudofunctor_witnesses', 'unit',
    'FreeBifibration', 'bifibration', 'cut',
    'permeq_class', 'permeq_decide_bfs', 'permeq_neighbors',
    'strictify', 'strictify_derivation', 'strictify_formula',
    'count_permeq_classes', 'derivations', 'permeq_classes',
    'random_composable_pair', 'random_derivation', 'random_extension',
    'transport_derivation', 'transport_fibration', 'transport_formula',
]
