"""Reduced pipe dreams, Schubert polynomials, and the mitosis recursion.

The package computes the set RP(w) of reduced pipe dreams of a permutation
three independent ways (brute force, the mitosis recursion, and via the
divided-difference / positive-formula identities), together with the
intron-mutation involution, the mitosis poset with its poptotic paths, and
a shelling checker for subword complexes.
"""

from .introns import ColumnKind, Intron, RowPairDecomposition, decompose, ell, mutate_intron, tau
from .mitosis import OffspringList, mitosis, mitosis_along, mitosis_set, rp_by_mitosis
from .oracle import enumerate_rp, enumerate_rp_fullgrid, rp_table
from .permutations import (
    BoundExceededError,
    Perm,
    Word,
    all_permutations,
    all_reduced_words,
    compose,
    has_left_descent,
    has_right_descent,
    identity,
    inverse,
    is_dominant,
    is_reduced_word,
    length,
    lex_first_reduced_word,
    long_permutation,
    multiply_left_s,
    multiply_right_s,
    perm_from_str,
    perm_to_str,
    rothe_diagram,
    word_product,
)
from .pipedream import (
    PipeDream,
    Wiring,
    apply_chute,
    apply_inverse_chute,
    chutable_rectangles,
    d0,
    has_elbow_over_cross,
    is_reduced,
    j_columns,
    render_ascii,
    start_row,
    top_pipe_dream,
    wiring,
)
from .poset import (
    MitosisPoset,
    PreimageTree,
    SimplicialComplex,
    bfs_order,
    build_poset,
    dot_poset,
    dot_tree,
    fibers_json,
    is_poptotic,
    is_shelling,
    preimage_tree,
    subword_complex,
    top_dream_word,
    triangle_order,
)
from .schubert import (
    Polynomial,
    divided_difference,
    monomial_of,
    schubert_bjs,
    schubert_divdiff,
    schubert_mitosis,
    staircase_monomial,
)

__version__ = "0.1.0"
