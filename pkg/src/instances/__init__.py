# 具体例：シード・解釈先・木・森・オラクル
from .seeds import (
    MICRO_SEEDS, SEED_NAMES, ambisimplex, bnat, free_fork, free_line, free_pair, ord_formula, ord_formula_prime,
    omega_to_bnat, p2, pomega, seed, zigzag_example,
)
from .trees import (
    MarkedTree, PlaneTree, example_tree_pair, formula_of_tree, is_natural, natural_transformations,
    tree_of_formula, tree_of_walk, walk_displacement, walk_of_tree,
)
from .targets import (
    CleavedTarget, DisplacementTarget, SimplexTarget, TargetArrow, TreeTarget, interpret, interpret_formula,
)
from .oracles import MonotoneMap, monotone_oracle, simplex_image, tree_morphism_oracle
from .forests import (
    F03_COVERS, F03_LABELS, IncreasingBinaryForest, NoncrossingPartition,
    closed_formulas, double_factorial, forest_of_formula, formula_of_forest, noncrossing_of,
    kreweras_interval_count, noncrossing_partitions,
)

__all__ = [
    'MICRO_SEEDS', 'SEED_NAMES', 'ambisimplex', 'bnat', 'free_fork', 'free_line', 'free_pair', 'ord_formula',
    'ord_formula_prime', 'omega_to_bnat', 'p2', 'pomega', 'seed', 'zigzag_example',
    'MarkedTree', 'PlaneTree', 'example_tree_pair', 'formula_of_tree', 'is_natural',
    'natural_transformations', 'tree_of_formula', 'tree_of_walk', 'walk_displacement', 'walk_of_tree',
    'CleavedTarget', 'DisplacementTarget', 'SimplexTarget', 'TargetArrow', 'TreeTarget', 'interpret',
    'interpret_formula',
    'MonotoneMap', 'monotone_oracle', 'simplex_image', 'tree_morphism_oracle',
    'F03_COVERS', 'F03_LABELS', 'IncreasingBinaryForest', 'NoncrossingPartition',
    'closed_formulas', 'double_factorial', 'forest_of_formula', 'formula_of_forest', 'noncrossing_of',
    'kreweras_interval_count', 'noncrossing_partitions',
]
