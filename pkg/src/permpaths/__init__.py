"""Pattern-restricted permutations, marked patterns, and lattice-path bijections.

The library covers classical, bar- and hat-marked pattern avoidance, Dyck
and Motzkin words with their statistics, four explicit bijections between
restricted permutation classes and path classes, a Motzkin generating tree,
and a brute-force oracle that verifies every structural claim exhaustively
at small sizes.
"""

from .bijections import (
    GeometricRepresentation,
    IndexedDyckPath,
    blocks_overlap,
    format_indexed_path,
    geometric_representation,
    index_dyck_word,
    indexed_path_word,
    nested_pairs_have_smaller_labels,
    parse_indexed_path,
    peaks_carry_equal_labels,
    phi,
    phi_inverse,
    phi_recursive,
    psi,
    psi_inverse,
    representation_of_blocks,
    simion_schmidt,
    simion_schmidt_inverse,
    theta,
    theta_inverse,
    validate_indexed_path,
    valleys_carry_consecutive_labels,
)
from .ecotree import (
    OMEGA,
    SuccessionRule,
    TreeNode,
    active_sites,
    children,
    expand_level,
    insert_max,
    iter_levels,
    make_node,
    root,
    tree_as_dicts,
    verify_succession,
)
from .oracle import (
    GrowthTable,
    all_132_avoiders,
    catalan,
    check_hat_bar_criterion,
    count_class,
    enumerate_class,
    fine_number,
    growth_table,
    motzkin_number,
)
from .paths import (
    DyckWord,
    MotzkinWord,
    PathParseError,
    PathStats,
    contains_u_dpow_u,
    enumerate_dyck,
    enumerate_motzkin,
    has_peak_at_height,
    heights,
    is_dyck_word,
    is_motzkin_word,
    parse_path,
    proper_segments,
    render_path,
    stats,
)
from .patterns import (
    BAR,
    HAT,
    MarkedPattern,
    avoids_all,
    avoids_barred,
    avoids_hatted,
    contains_classical,
    format_marked_pattern,
    neighbor_condition_holds,
    parse_class_spec,
    parse_marked_pattern,
)
from .permutations import (
    DomainError,
    LtrmDecomposition,
    Permutation,
    complement,
    ensure_permutation,
    format_permutation,
    has_adjacent_consecutive_factor,
    inverse,
    is_permutation,
    left_to_right_minima,
    ltrm_decompose,
    parse_permutation,
    reduce,
    reduce_multiset,
    reverse,
    run_embedding,
    satisfies_ltrm_conditions,
    symmetry,
)

__version__ = "0.1.0"
